#pragma once
// Umbrella header for the whole library.

#include "scngen/centrality.hpp"
#include "scngen/cli.hpp"
#include "scngen/config.hpp"
#include "scngen/csv.hpp"
#include "scngen/date.hpp"
#include "scngen/errors.hpp"
#include "scngen/evaluation.hpp"
#include "scngen/exports.hpp"
#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/matcher.hpp"
#include "scngen/network.hpp"
#include "scngen/pipeline.hpp"
#include "scngen/tokenizer.hpp"
