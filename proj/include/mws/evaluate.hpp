#pragma once

// Front door of the evaluators: relabel the diagram for a mu-index, then
// dispatch to the recursive, closed-form or oracle computation.

#include "mws/oracle.hpp"
#include "mws/weights.hpp"

namespace mws {

enum class Method { recursive, closed, oracle };

inline Method parse_method(const std::string& s) {
  if (s == "recursive") return Method::recursive;
  if (s == "closed") return Method::closed;
  if (s == "oracle") return Method::oracle;
  throw error("unknown method '" + s + "'");
}

inline WeightValue evaluate(const ChordDiagram& d, const MuIndex& idx, Method method) {
  auto relabeled = relabel_for_index(d, idx);
  if (!relabeled) return 0;  // endpoint on a component outside the index
  switch (method) {
    case Method::recursive:
      return eval_recursive(*relabeled);
    case Method::closed:
      return eval_closed(*relabeled);
    case Method::oracle: {
      const int n = idx.degree();
      if (relabeled->degree() != n) return 0;  // wrong-degree diagrams carry no weight
      MuIndex canonical;
      for (int k = 1; k <= n; ++k) canonical.leading.push_back(k);
      canonical.target = n + 1;
      return static_cast<WeightValue>(weight_via_mu(*relabeled, canonical));
    }
  }
  throw std::logic_error("evaluate: bad method");
}

}  // namespace mws
