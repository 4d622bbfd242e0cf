#pragma once

#include "g2dtg/bigint.hpp"
#include "g2dtg/filters.hpp"
#include "g2dtg/fusion.hpp"
#include "g2dtg/group_data.hpp"
#include "g2dtg/number_theory.hpp"
#include "g2dtg/param_poly.hpp"
#include "g2dtg/pipeline.hpp"
#include "g2dtg/rational.hpp"
#include "g2dtg/report.hpp"
#include "g2dtg/suborbit_tables.hpp"
