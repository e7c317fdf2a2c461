#ifndef SYMAUTO_REPLACE_HH
#define SYMAUTO_REPLACE_HH

#include "symauto/automata.hh"
#include "symauto/transducer.hh"

namespace symauto {

/// Same shape as `pattern`, every edge erasing what it reads.
/// Throws ValidationError if the pattern accepts the empty word.
Sft pattern_to_eraser(const Sfa& pattern);

/// Chain of |r| input-free edges emitting r one letter at a time.
Sft const_to_emitter(const Word& r);

/**
 * Transducer rewriting one occurrence of `pattern` into `r`: the eraser
 * followed by the emitter, joined by input-free erasing edges, with copy
 * loops (Sigma, identity) on the eraser's initial states and the emitter's
 * accepting state. Throws ValidationError if the pattern accepts the empty
 * word.
 */
Sft build_replace_sft(const Sfa& pattern, const Word& r);

/// Words that contain a factor in L(pattern).
Sfa contains_pattern(const Sfa& pattern);

/**
 * Image of L(a) under single-occurrence replacement: words with a match map
 * to every word obtained by replacing exactly one matching factor (any one,
 * not the leftmost); words without a match pass through unchanged.
 */
Sfa replace_image(const Sfa& a, const Sfa& pattern, const Word& r, const Limits& limits = {});

} // namespace symauto

#endif
