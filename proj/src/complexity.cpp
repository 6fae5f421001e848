#include "abducer/complexity.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "abducer/errors.hpp"

namespace abducer {

Backend backend_from_name(const std::string& name) {
  if (name == "lz76") return Backend::Lz76;
  if (name == "deflate") return Backend::Deflate;
  throw BackendUnavailable(name);
}

std::string backend_name(Backend b) {
  return b == Backend::Lz76 ? "lz76" : "deflate";
}

std::size_t lz76_phrases(std::string_view s) {
  const std::size_t n = s.size();
  std::size_t phrases = 0;
  std::size_t i = 0;
  while (i < n) {
    // Longest prefix of s[i..] that can be copied from a position j < i,
    // where the copy may run past i (self-overlap).
    std::size_t best = 0;
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t l = 0;
      while (i + l < n && s[j + l] == s[i + l]) ++l;
      best = std::max(best, l);
      if (i + best == n) break;
    }
    ++phrases;
    i += best + 1;  // copied part plus one fresh symbol (or end of input)
  }
  return phrases;
}

namespace {

std::size_t deflate_bytes(std::string_view s) {
  uLongf out_len = compressBound(static_cast<uLong>(s.size()));
  std::vector<Bytef> out(out_len);
  int rc = compress2(out.data(), &out_len, reinterpret_cast<const Bytef*>(s.data()),
                     static_cast<uLong>(s.size()), Z_BEST_COMPRESSION);
  if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
  return static_cast<std::size_t>(out_len);
}

double estimate_bits(std::string_view s, Backend backend) {
  if (s.empty()) return 0.0;
  if (backend == Backend::Lz76) {
    double c = static_cast<double>(lz76_phrases(s));
    return c * std::log2(c + 1.0);
  }
  return 8.0 * static_cast<double>(deflate_bytes(s));
}

}  // namespace

ComplexityEstimate plain_complexity(std::string_view s, Backend backend) {
  return {estimate_bits(s, backend), backend, s.size()};
}

ComplexityEstimate conditional_complexity(std::string_view s, std::string_view x,
                                          Backend backend) {
  std::string xs;
  xs.reserve(x.size() + s.size());
  xs.append(x);
  xs.append(s);
  double bits = estimate_bits(xs, backend) - estimate_bits(x, backend);
  return {std::max(0.0, bits), backend, s.size()};
}

ComplexityEstimate score_relation_change(const RelationMatrix& before,
                                         const RelationMatrix& after, Backend backend) {
  if (before.order != after.order) throw OrderMismatch();
  return conditional_complexity(matrix_bits(after), matrix_bits(before), backend);
}

}  // namespace abducer
