#pragma once

// Umbrella header.

#include <hmap/series.hpp>
#include <hmap/harmonic_map.hpp>
#include <hmap/catalog.hpp>
#include <hmap/classifiers.hpp>
#include <hmap/convolution.hpp>
#include <hmap/radius.hpp>
#include <hmap/expression.hpp>
#include <hmap/report_json.hpp>
#include <hmap/plot.hpp>
#include <hmap/verify.hpp>
#include <hmap/cli.hpp>
