#pragma once

#include "canonical.hpp"
#include "certificate.hpp"
#include "config.hpp"
#include "constructible.hpp"
#include "cover.hpp"
#include "criticality.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "io.hpp"
#include "property.hpp"
#include "solver.hpp"

namespace dpdeg {
inline constexpr const char* version = "dpdeg/1";
}
