#pragma once

#include "pnh/word.hpp"
#include "pnh/braid.hpp"
#include "pnh/presentation.hpp"
#include "pnh/schreier.hpp"
#include "pnh/smith.hpp"
#include "pnh/coset_table.hpp"
#include "pnh/tietze.hpp"
#include "pnh/io/parse.hpp"
#include "pnh/pipeline.hpp"
#include "pnh/curves/quad_scalar.hpp"
#include "pnh/curves/poly.hpp"
#include "pnh/curves/resultant.hpp"
#include "pnh/curves/persson.hpp"
