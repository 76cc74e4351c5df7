#pragma once

#include "coordlab/bounds.hpp"
#include "coordlab/convexity.hpp"
#include "coordlab/corpus.hpp"
#include "coordlab/domain.hpp"
#include "coordlab/error.hpp"
#include "coordlab/identities.hpp"
#include "coordlab/kernels.hpp"
#include "coordlab/quadrature.hpp"
