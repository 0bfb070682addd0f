#pragma once

#include "convexdecomp/baseline.hpp"
#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/generate.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/io.hpp"
#include "convexdecomp/minimal.hpp"
#include "convexdecomp/oracle.hpp"
#include "convexdecomp/pm.hpp"
#include "convexdecomp/radial.hpp"
#include "convexdecomp/svg.hpp"
#include "convexdecomp/verify.hpp"
