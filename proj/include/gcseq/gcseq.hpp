#pragma once

#include "gcseq/errors.hpp"
#include "gcseq/bignat.hpp"
#include "gcseq/ntcore.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/seqgen.hpp"
#include "gcseq/polynomial.hpp"
#include "gcseq/ffield.hpp"
#include "gcseq/lincomp.hpp"
#include "gcseq/adic2.hpp"
#include "gcseq/report.hpp"
#include "gcseq/analysis.hpp"
#include "gcseq/verify.hpp"
