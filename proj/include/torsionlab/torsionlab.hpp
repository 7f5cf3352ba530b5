#pragma once
// Convenience umbrella for the whole library.

#include "torsionlab/linalg.hpp"
#include "torsionlab/spectral.hpp"
#include "torsionlab/graded_complex.hpp"
#include "torsionlab/det_line.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/zeta.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/io.hpp"
#include "torsionlab/suite.hpp"
