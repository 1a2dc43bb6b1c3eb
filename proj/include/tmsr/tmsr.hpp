#ifndef TMSR_TMSR_HPP
#define TMSR_TMSR_HPP

#include "tmsr/audit.hpp"
#include "tmsr/automorphism.hpp"
#include "tmsr/builder.hpp"
#include "tmsr/cayley.hpp"
#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/group.hpp"
#include "tmsr/io.hpp"
#include "tmsr/permutation.hpp"
#include "tmsr/refinement.hpp"
#include "tmsr/regular_representation.hpp"
#include "tmsr/trr.hpp"

#endif  // TMSR_TMSR_HPP
