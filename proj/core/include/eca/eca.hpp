#pragma once

// Umbrella header.
#include "eca/analysis.hpp"
#include "eca/binarize.hpp"
#include "eca/coincidence.hpp"
#include "eca/errors.hpp"
#include "eca/event_series.hpp"
#include "eca/raster_plot.hpp"
#include "eca/report.hpp"
#include "eca/series_io.hpp"
#include "eca/significance.hpp"
#include "eca/surrogates.hpp"
