#pragma once

#include "lieforge/rational.hpp"
#include "lieforge/report.hpp"
#include "lieforge/matrix.hpp"
#include "lieforge/elimination.hpp"
#include "lieforge/subspace.hpp"
#include "lieforge/lie_algebra.hpp"
#include "lieforge/representation.hpp"
#include "lieforge/split_algebra.hpp"
#include "lieforge/cohomology.hpp"
#include "lieforge/biderivations.hpp"
#include "lieforge/naive_oracle.hpp"
#include "lieforge/fgdelta.hpp"
#include "lieforge/constructions.hpp"
