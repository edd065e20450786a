#pragma once

#include "hyp3f2/binomsum.hpp"
#include "hyp3f2/branch.hpp"
#include "hyp3f2/closed_forms.hpp"
#include "hyp3f2/dual.hpp"
#include "hyp3f2/errors.hpp"
#include "hyp3f2/identities.hpp"
#include "hyp3f2/numeric.hpp"
#include "hyp3f2/pochhammer.hpp"
#include "hyp3f2/rational.hpp"
#include "hyp3f2/report.hpp"
#include "hyp3f2/series.hpp"
#include "hyp3f2/verify.hpp"
