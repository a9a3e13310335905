#pragma once

#include "ddr/asymptotics.hpp"
#include "ddr/bounds.hpp"
#include "ddr/constructions.hpp"
#include "ddr/designs.hpp"
#include "ddr/empirics.hpp"
#include "ddr/error.hpp"
#include "ddr/io.hpp"
#include "ddr/numeric.hpp"
#include "ddr/orthopoly.hpp"
#include "ddr/polynomial.hpp"
#include "ddr/report.hpp"
#include "ddr/spaces.hpp"
