#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "abducer/model.hpp"

namespace abducer {

enum class Backend { Lz76, Deflate };

// Accepts "lz76" and "deflate"; throws BackendUnavailable otherwise.
Backend backend_from_name(const std::string& name);
std::string backend_name(Backend b);

// Compression-based approximations below 64 bits of input are unreliable;
// estimates carry this flag so front-ends can warn.
constexpr std::size_t kSmallInputBits = 64;

struct ComplexityEstimate {
  double bits = 0.0;  // nonnegative
  Backend backend = Backend::Lz76;
  std::size_t input_length = 0;

  bool small_input() const { return input_length < kSmallInputBits; }
};

// Number of phrases in the LZ76 exhaustive-history parsing of s: each phrase
// is the shortest extension of the scan position that cannot be reproduced
// from the preceding text by copy-extension (self-overlap allowed). 0 for the
// empty string. s must contain only '0' and '1'.
std::size_t lz76_phrases(std::string_view s);

// Approximation to K(s). lz76: phrases * log2(phrases + 1). deflate: output
// size in bits of zlib at maximum level. Empty input scores 0 either way.
ComplexityEstimate plain_complexity(std::string_view s, Backend backend);

// Approximation to K(s|x): max(0, plain(x ++ s) - plain(x)).
ComplexityEstimate conditional_complexity(std::string_view s, std::string_view x,
                                          Backend backend);

// Conditional complexity of `after` given `before` via their bit
// serializations. Throws OrderMismatch if the matrices use different orders.
ComplexityEstimate score_relation_change(const RelationMatrix& before,
                                         const RelationMatrix& after, Backend backend);

}  // namespace abducer
