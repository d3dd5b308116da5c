#pragma once

#include "gentle/error.hpp"
#include "gentle/rational.hpp"
#include "gentle/matrix.hpp"
#include "gentle/multipoly.hpp"
#include "gentle/poly_matrix.hpp"
#include "gentle/fp.hpp"
#include "gentle/quiver.hpp"
#include "gentle/rank.hpp"
#include "gentle/representation.hpp"
#include "gentle/updown.hpp"
#include "gentle/homalg.hpp"
#include "gentle/semiinv.hpp"
#include "gentle/stability.hpp"
#include "gentle/io.hpp"
