#pragma once

#include <string>

#include "adc/complex.hpp"

namespace adc {

/// Canonical JSON serialization: basis ordered by (degree, insertion index),
/// differential terms by target position. Byte-deterministic.
std::string serialize_adc(const BasedADC& a);

/// Inverse of serialize_adc; throws InvalidArgument with a field diagnostic
/// on schema violations.
BasedADC parse_adc(const std::string& text);

/// Rebuilds a complex with its basis in serialization order, so that
/// parse_adc(serialize_adc(a)) == canonicalize(a) exactly.
BasedADC canonicalize(const BasedADC& a);

/// DOT digraph of the basis order: nodes are labels annotated with degree;
/// edges are the covering relations (transitive reduction) of the closure.
/// If the preorder has cycles the generating edges are rendered instead, so
/// the cycle stays visible.
std::string export_dot(const BasedADC& a);

}  // namespace adc
