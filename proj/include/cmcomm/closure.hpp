#ifndef CMCOMM_CLOSURE_HPP_
#define CMCOMM_CLOSURE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace cmcomm::detail {

  //! Subuniverse generation over an abstract element encoding.
  //!
  //! `apply(op, args)` evaluates operation `op` on a span of encoded
  //! arguments.  Elements are processed in discovery order (semi-naive: each
  //! argument tuple is tried exactly once, when its last member is
  //! processed).
  //!
  //! If `group_op` names an operation that is a group multiplication, closure
  //! under it is computed by right multiplication with a generator list only:
  //! every element is either a generator or a product w*g with g a
  //! generator.  Products under the group operation are exhausted before any
  //! other operation is applied, so the current set is a subgroup whenever
  //! another operation adds an element, and the generator list stays
  //! logarithmic in the result size.
  //!
  //! `saturation` is an upper bound on the size of the result; reaching it
  //! ends the computation early.
  template <typename Code, typename Apply>
  std::vector<Code> close(std::span<std::size_t const> arities,
                          Apply&&                      apply,
                          std::span<Code const>        generators,
                          std::optional<std::size_t>   group_op   = std::nullopt,
                          std::optional<std::size_t>   saturation = std::nullopt) {
    std::vector<Code>       elements;
    std::unordered_set<Code> seen;
    std::vector<Code>       group_gens;
    std::size_t             group_next = 0;  // next element to right-multiply
    std::size_t             other_next = 0;  // next element for other ops
    bool                    saturated  = false;

    auto full = [&] { return saturation && elements.size() >= *saturation; };

    // Elements reached as w * g need not become generators.
    auto add = [&](Code c, bool via_group) {
      if (saturated || !seen.insert(c).second) {
        return;
      }
      elements.push_back(c);
      if (group_op && !via_group) {
        group_gens.push_back(c);
        // earlier elements have not been multiplied by the new generator
        std::size_t const bound = group_next;
        for (std::size_t i = 0; i < bound && !saturated; ++i) {
          Code const args[2] = {elements[i], c};
          Code const r       = apply(*group_op, std::span<Code const>(args, 2));
          if (seen.find(r) == seen.end()) {
            seen.insert(r);
            elements.push_back(r);
            saturated = full();
          }
        }
      }
      saturated = saturated || full();
    };

    for (std::size_t op = 0; op < arities.size(); ++op) {
      if (arities[op] == 0) {
        add(apply(op, std::span<Code const>()), false);
      }
    }
    for (auto g : generators) {
      add(g, false);
    }

    std::vector<std::size_t> idx;
    std::vector<Code>        args;
    while (!saturated) {
      if (group_op && group_next < elements.size()) {
        Code const x = elements[group_next++];
        // group_gens may grow while iterating; new generators handle x
        // themselves through the back-fill in add().
        std::size_t const gens = group_gens.size();
        for (std::size_t i = 0; i < gens && !saturated; ++i) {
          Code const a[2] = {x, group_gens[i]};
          add(apply(*group_op, std::span<Code const>(a, 2)), true);
        }
        continue;
      }
      if (other_next >= elements.size()) {
        break;
      }
      std::size_t const cur = other_next++;
      for (std::size_t op = 0; op < arities.size() && !saturated; ++op) {
        std::size_t const r = arities[op];
        if (r == 0 || (group_op && op == *group_op)) {
          continue;
        }
        // all tuples over elements[0..cur] containing cur, grouped by the
        // first position p holding cur: positions before p range over
        // [0, cur), positions after p over [0, cur].
        args.resize(r);
        for (std::size_t p = 0; p < r && !saturated; ++p) {
          if (p > 0 && cur == 0) {
            break;
          }
          idx.assign(r, 0);
          idx[p] = cur;
          while (!saturated) {
            for (std::size_t i = 0; i < r; ++i) {
              args[i] = elements[idx[i]];
            }
            add(apply(op, std::span<Code const>(args)), false);
            std::size_t pos = 0;
            for (; pos < r; ++pos) {
              if (pos == p) {
                continue;
              }
              std::size_t const limit = pos < p ? cur : cur + 1;
              if (++idx[pos] < limit) {
                break;
              }
              idx[pos] = 0;
            }
            if (pos == r) {
              break;
            }
          }
        }
      }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
  }

}  // namespace cmcomm::detail

#endif  // CMCOMM_CLOSURE_HPP_
