#pragma once

#include <cstddef>
#include <vector>

#include "bpir/pir/answer.hpp"
#include "bpir/pir/params.hpp"
#include "bpir/rs/grs.hpp"

namespace bpir::pir {

struct Retrieval {
  std::vector<ExtElem> file;                // delta symbols of the requested row
  std::vector<std::size_t> error_servers;   // servers whose answers were corrected, 0-based
};

// Length-k, dimension k-2b GRS code over F_q containing the scaled traces
// c_j = prod_l f_l(beta_j) * Tr(v_j phi(beta_j)). Its parity checks are
// sum_j beta_j^e c_j = 0 for e < 2b.
rs::GrsCode<std::uint32_t> trace_code(const SchemeParams& p);

// Full-mode answers from exactly r distinct servers; decodes the length-r
// restriction of RS_{r-2b} and evaluates phi at the alpha points.
Retrieval retrieve_from_r(const SchemeParams& p, const AnswerSet& answers);

// Trace-mode answers from all k servers.
Retrieval retrieve_from_k(const SchemeParams& p, const AnswerSet& answers);

// Dispatches on answers.mode.
Retrieval retrieve(const SchemeParams& p, const AnswerSet& answers);

}  // namespace bpir::pir
