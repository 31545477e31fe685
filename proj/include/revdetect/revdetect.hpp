#pragma once

#include "revdetect/analysis.hpp"
#include "revdetect/boosting.hpp"
#include "revdetect/bundle.hpp"
#include "revdetect/corpus.hpp"
#include "revdetect/cross_validation.hpp"
#include "revdetect/ensemble.hpp"
#include "revdetect/error.hpp"
#include "revdetect/eval.hpp"
#include "revdetect/features.hpp"
#include "revdetect/forest.hpp"
#include "revdetect/pipeline.hpp"
#include "revdetect/predictions.hpp"
#include "revdetect/scaler.hpp"
#include "revdetect/svm.hpp"
#include "revdetect/textprep.hpp"
#include "revdetect/tfidf.hpp"
#include "revdetect/word2vec.hpp"
