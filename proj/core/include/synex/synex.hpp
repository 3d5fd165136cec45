#pragma once

#include "synex/agreement.hpp"
#include "synex/dataset.hpp"
#include "synex/errors.hpp"
#include "synex/fuzzy.hpp"
#include "synex/graph.hpp"
#include "synex/lexicon.hpp"
#include "synex/masking.hpp"
#include "synex/normalize.hpp"
#include "synex/random.hpp"
#include "synex/report.hpp"
#include "synex/stats.hpp"
#include "synex/term.hpp"
#include "synex/tuning.hpp"
