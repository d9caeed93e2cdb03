#pragma once

#include "snc/adversarial.hpp"
#include "snc/bitset.hpp"
#include "snc/chernoff.hpp"
#include "snc/claims.hpp"
#include "snc/claims_suite.hpp"
#include "snc/constructions.hpp"
#include "snc/digraph.hpp"
#include "snc/enumerate.hpp"
#include "snc/gnp.hpp"
#include "snc/graph.hpp"
#include "snc/induced.hpp"
#include "snc/matching.hpp"
#include "snc/ordering.hpp"
#include "snc/report.hpp"
#include "snc/rng.hpp"
#include "snc/text_io.hpp"
