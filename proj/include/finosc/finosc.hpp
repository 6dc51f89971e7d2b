#pragma once

#include "finosc/combinatorics.hpp"
#include "finosc/errors.hpp"
#include "finosc/fourier.hpp"
#include "finosc/frames.hpp"
#include "finosc/gaussians.hpp"
#include "finosc/grid.hpp"
#include "finosc/kravchuk.hpp"
#include "finosc/oscillators.hpp"
#include "finosc/spectral.hpp"
#include "finosc/theta.hpp"
#include "finosc/tolerances.hpp"
#include "finosc/wigner.hpp"
