#pragma once

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/corpus.hpp"
#include "uiprune/textprep.hpp"
#include "uiprune/informative.hpp"
#include "uiprune/uiextract.hpp"
#include "uiprune/linker.hpp"
#include "uiprune/topics.hpp"
#include "uiprune/signals.hpp"
#include "uiprune/recommender.hpp"
#include "uiprune/eval.hpp"
#include "uiprune/pipeline.hpp"
#include "uiprune/commands.hpp"
