#pragma once

#include "cmgen/agreement.hpp"
#include "cmgen/corpus.hpp"
#include "cmgen/embedding.hpp"
#include "cmgen/error.hpp"
#include "cmgen/evaluation.hpp"
#include "cmgen/frame_inventory.hpp"
#include "cmgen/frame_metrics.hpp"
#include "cmgen/inflect.hpp"
#include "cmgen/mapper.hpp"
#include "cmgen/random.hpp"
#include "cmgen/sgns.hpp"
#include "cmgen/stats.hpp"
#include "cmgen/vocabulary.hpp"
