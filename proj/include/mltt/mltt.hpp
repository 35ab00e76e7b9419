#ifndef MLTT_MLTT_HPP
#define MLTT_MLTT_HPP

#include "mltt/syntax.hpp"
#include "mltt/pretty.hpp"
#include "mltt/equality.hpp"
#include "mltt/typecheck.hpp"
#include "mltt/surface.hpp"
#include "mltt/corpus.hpp"

#endif  // MLTT_MLTT_HPP
