#pragma once

// umbrella header; report.hpp is not pulled in because it needs the vendored json
// library, which only the CLI links

#include <gwnb/analysis.hpp>
#include <gwnb/binomial.hpp>
#include <gwnb/bipoly.hpp>
#include <gwnb/coeffs.hpp>
#include <gwnb/mobius.hpp>
#include <gwnb/params.hpp>
#include <gwnb/pgf.hpp>
#include <gwnb/rational.hpp>
#include <gwnb/simulate.hpp>
#include <gwnb/verify.hpp>
