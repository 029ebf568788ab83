#pragma once

// Exact models of the higher-rank Racah algebra: Bargmann and
// Barut-Girardello differential-operator realizations, harmonic bases,
// the reduced n-2 variable realization, the Laplace intertwiner and the
// Miller Hamiltonian identification, all over exact rational arithmetic.

#include "racahkit/error.hpp"
#include "racahkit/harmonics.hpp"
#include "racahkit/laurent.hpp"
#include "racahkit/linalg.hpp"
#include "racahkit/param.hpp"
#include "racahkit/racah.hpp"
#include "racahkit/rational.hpp"
#include "racahkit/reduced.hpp"
#include "racahkit/report.hpp"
#include "racahkit/su11.hpp"
#include "racahkit/suite.hpp"
#include "racahkit/text.hpp"
#include "racahkit/transforms.hpp"
#include "racahkit/weyl.hpp"
