#pragma once

#include "plainsum/corpus.hpp"
#include "plainsum/error.hpp"
#include "plainsum/lexicon.hpp"
#include "plainsum/pagerank.hpp"
#include "plainsum/readability.hpp"
#include "plainsum/report.hpp"
#include "plainsum/rouge.hpp"
#include "plainsum/stats.hpp"
#include "plainsum/summarizers.hpp"
#include "plainsum/textproc.hpp"
