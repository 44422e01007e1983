#pragma once

#include "domcover/colored.hpp"
#include "domcover/cover.hpp"
#include "domcover/digraph.hpp"
#include "domcover/errors.hpp"
#include "domcover/io.hpp"
#include "domcover/oracle.hpp"
#include "domcover/paradox.hpp"
#include "domcover/rng.hpp"
#include "domcover/vertex_set.hpp"
