#pragma once

#include "biperiodic/errors.hpp"
#include "biperiodic/identities.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/matrix_seq.hpp"
#include "biperiodic/quad.hpp"
#include "biperiodic/rational.hpp"
#include "biperiodic/report.hpp"
#include "biperiodic/sequences.hpp"
#include "biperiodic/series.hpp"
