#pragma once

// Convenience umbrella for the whole library.

#include "arrows/affine.hpp"
#include "arrows/arrow.hpp"
#include "arrows/arrow_ops.hpp"
#include "arrows/equivalence.hpp"
#include "arrows/error.hpp"
#include "arrows/harness.hpp"
#include "arrows/line.hpp"
#include "arrows/metric.hpp"
#include "arrows/point.hpp"
#include "arrows/rational.hpp"
#include "arrows/scene.hpp"
#include "arrows/vector_space.hpp"
