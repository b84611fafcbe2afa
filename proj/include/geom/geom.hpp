#pragma once

// Everything at once.
#include "geom/budget.hpp"
#include "geom/chain.hpp"
#include "geom/errors.hpp"
#include "geom/field.hpp"
#include "geom/form.hpp"
#include "geom/gallery.hpp"
#include "geom/geometry.hpp"
#include "geom/incidence.hpp"
#include "geom/io.hpp"
#include "geom/linalg.hpp"
#include "geom/pointset.hpp"
#include "geom/polar.hpp"
#include "geom/rank.hpp"
#include "geom/report.hpp"
#include "geom/suite.hpp"
