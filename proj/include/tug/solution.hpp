#pragma once

#include <functional>
#include <string>
#include <utility>

#include "tug/errors.hpp"
#include "tug/game.hpp"

namespace tug {

/// A named, evaluable allocation rule. The optional domain guard rejects
/// games outside the rule's domain; evaluation then errors instead of
/// returning garbage.
template <class R>
struct SolutionRule {
  std::string name;
  std::function<Allocation<R>(const Game<R>&)> eval_fn;
  std::function<bool(const Game<R>&)> domain_guard;  // empty = total domain

  bool admits(const Game<R>& v) const { return !domain_guard || domain_guard(v); }

  Allocation<R> operator()(const Game<R>& v) const {
    if (!admits(v)) {
      std::string table;
      for (std::uint32_t m = 0; m < v.table_size(); ++m)
        table += (m ? "," : "") + ScalarTraits<R>::str(v.worth(m));
      throw DomainGuardFailed("rule '" + name + "' rejects the game on n=" +
                              std::to_string(v.players()) + " with worths [" + table + "]");
    }
    return eval_fn(v);
  }
};

}  // namespace tug
