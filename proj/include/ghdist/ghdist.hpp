#pragma once

#include "ghdist/closed_form.hpp"
#include "ghdist/error.hpp"
#include "ghdist/graph.hpp"
#include "ghdist/io.hpp"
#include "ghdist/metric.hpp"
#include "ghdist/oracle.hpp"
#include "ghdist/partition.hpp"
#include "ghdist/rational.hpp"
