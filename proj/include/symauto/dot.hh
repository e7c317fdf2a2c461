#ifndef SYMAUTO_DOT_HH
#define SYMAUTO_DOT_HH

#include <ostream>
#include <string_view>

#include "symauto/automata.hh"
#include "symauto/transducer.hh"

namespace symauto {

// GraphViz output. Initial states get an arrow from an invisible node,
// accepting states are double circles, epsilon edges are dashed.

void write_dot(std::ostream& os, const Sfa& a, std::string_view name = "sfa");
void write_dot(std::ostream& os, const EpsilonSfa& e, std::string_view name = "esfa");
/// Edges are labeled `input / fn`, with `eps` for input-free edges.
void write_dot(std::ostream& os, const Sft& t, std::string_view name = "sft");

} // namespace symauto

#endif
