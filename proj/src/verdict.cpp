#include "mfkron/verdict.hpp"

namespace mfkron {

  std::string Normalization::to_string() const {
    std::string out;
    auto append = [&out](char const* word) {
      if (!out.empty()) {
        out += ',';
      }
      out += word;
    };
    if (conjugate_first) {
      append("conjugate-first");
    }
    if (conjugate_second) {
      append("conjugate-second");
    }
    if (swapped) {
      append("swapped");
    }
    if (rotated) {
      append("rotated");
    }
    return out.empty() ? "identity" : out;
  }

}  // namespace mfkron
