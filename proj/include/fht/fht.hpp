#pragma once

#include "fht/analysis.hpp"
#include "fht/dyadic.hpp"
#include "fht/errors.hpp"
#include "fht/generators.hpp"
#include "fht/graymap.hpp"
#include "fht/image.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"
#include "fht/reference.hpp"
#include "fht/superpixel.hpp"
