// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Counting homomorphisms from a finitely presented group into a finite
// permutation group, optionally pinning generator images.
//
// Two search modes return identical counts:
//  - naive: every assignment of group elements to the unpinned generators is
//    tested against every relator (the product enumeration used by GAP-style
//    reference scripts);
//  - backtrack: generators are assigned in declaration order and a relator is
//    checked as soon as its last generator has a value.
//
// Parallel backtracking splits on the value of the first unpinned generator.
// Every subtree is explored in full, each worker owns its partial assignment,
// and per-branch results are merged in branch order, so counts, statistics
// and materialized assignments do not depend on the number of workers.

#ifndef FOXHOM_HOM_SEARCH_HPP_
#define FOXHOM_HOM_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finite_group.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace foxhom {

  enum class SearchMode { naive, backtrack };

  //! Images of all generators, indexed by generator id.
  using Assignment = std::vector<Permutation>;

  struct Constraint {
    //! Fixed images for some generators.
    std::map<GeneratorId, Permutation> pins;
    //! Words whose image must equal the given element; checked on complete
    //! assignments only.
    std::vector<std::pair<Word, Permutation>> word_targets;
  };

  struct SearchOptions {
    SearchMode mode        = SearchMode::backtrack;
    bool       materialize = false;
    unsigned   jobs        = 1;
    //! Naive mode: cap on the number of assignments (TooLarge beyond it).
    //! Backtrack mode: cap on visited nodes (BudgetExceeded beyond it).
    std::uint64_t node_budget = 1'000'000'000;
  };

  struct SearchStats {
    std::uint64_t nodes          = 0;
    std::uint64_t relator_checks = 0;

    SearchStats& operator+=(SearchStats const& o) {
      nodes += o.nodes;
      relator_checks += o.relator_checks;
      return *this;
    }
    bool operator==(SearchStats const&) const = default;
  };

  struct HomSearchResult {
    std::uint64_t                          count = 0;
    std::optional<std::vector<Assignment>> assignments;
    SearchStats                            stats;
  };

  //! True iff every relator maps to the identity. Throws MissingImage when
  //! the assignment does not cover every generator, DegreeMismatch or
  //! NotAMember for images outside the group.
  [[nodiscard]] inline bool is_homomorphism(Presentation const& p, FiniteGroup const& grp,
                                            std::span<const Permutation> assignment) {
    if (assignment.size() < p.generator_count()) {
      throw Error(ErrorKind::missing_image,
                  "assignment covers " + std::to_string(assignment.size()) + " of "
                      + std::to_string(p.generator_count()) + " generators");
    }
    for (auto const& img : assignment) {
      (void) grp.require_member(img);
    }
    auto const id = grp.identity();
    for (auto const& r : p.relators()) {
      if (evaluate(r, assignment, grp) != id) {
        return false;
      }
    }
    return true;
  }

  namespace detail {

    using Index = FiniteGroup::index_type;

    class HomSearch {
     public:
      HomSearch(Presentation const& p, FiniteGroup const& grp, Constraint const& c,
                SearchOptions const& opts)
          : _p(p), _grp(grp), _view(grp.indices()), _opts(opts) {
        auto const n = p.generator_count();
        _pins.assign(n, std::nullopt);
        for (auto const& [g, perm] : c.pins) {
          if (g >= n) {
            throw Error(ErrorKind::unknown_generator,
                        "pinned generator id " + std::to_string(g));
          }
          _pins[g] = grp.require_member(perm);
        }
        for (auto const& [w, perm] : c.word_targets) {
          if (w.generator_bound() > n) {
            throw Error(ErrorKind::unknown_generator, "target word uses an unknown generator");
          }
          _targets.emplace_back(w, grp.require_member(perm));
        }
        for (GeneratorId g = 0; g < n; ++g) {
          if (!_pins[g]) {
            _order.push_back(g);
          }
        }
        // Relator i is checked at the depth where its last unpinned
        // generator is assigned; relators over pinned generators only are
        // checked once before the search.
        std::vector<std::size_t> depth_of(n, 0);
        for (std::size_t d = 0; d < _order.size(); ++d) {
          depth_of[_order[d]] = d + 1;
        }
        _triggers.assign(_order.size() + 1, {});
        for (std::size_t i = 0; i < p.relators().size(); ++i) {
          std::size_t depth = 0;
          for (auto const& s : p.relators()[i].syllables()) {
            depth = std::max(depth, depth_of[s.generator]);
          }
          _triggers[depth].push_back(i);
        }
      }

      HomSearchResult run() {
        return _opts.mode == SearchMode::naive ? run_naive() : run_backtrack();
      }

     private:
      struct Branch {
        std::uint64_t                   count = 0;
        std::vector<std::vector<Index>> found;
        SearchStats                     stats;
      };

      [[nodiscard]] std::vector<Index> initial() const {
        std::vector<Index> a(_p.generator_count(), 0);
        for (std::size_t g = 0; g < a.size(); ++g) {
          if (_pins[g]) {
            a[g] = *_pins[g];
          }
        }
        return a;
      }

      bool holds(std::size_t relator, std::vector<Index> const& a, SearchStats& st) const {
        ++st.relator_checks;
        return evaluate(_p.relators()[relator], std::span<const Index>(a), _view) == 0;
      }

      bool targets_hold(std::vector<Index> const& a) const {
        for (auto const& [w, want] : _targets) {
          if (evaluate(w, std::span<const Index>(a), _view) != want) {
            return false;
          }
        }
        return true;
      }

      void record(std::vector<Index> const& a, Branch& b) const {
        if (!targets_hold(a)) {
          return;
        }
        ++b.count;
        if (_opts.materialize) {
          b.found.push_back(a);
        }
      }

      HomSearchResult finish(std::vector<Branch>& branches) const {
        HomSearchResult result;
        if (_opts.materialize) {
          result.assignments.emplace();
        }
        for (auto& b : branches) {
          result.count += b.count;
          result.stats += b.stats;
          if (_opts.materialize) {
            for (auto const& a : b.found) {
              Assignment full;
              full.reserve(a.size());
              for (auto i : a) {
                full.push_back(_grp.element(i));
              }
              result.assignments->push_back(std::move(full));
            }
          }
        }
        return result;
      }

      HomSearchResult run_naive() {
        auto const    k     = _order.size();
        auto const    order = static_cast<std::uint64_t>(_grp.order());
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) {
          if (__builtin_mul_overflow(total, order, &total) || total > _opts.node_budget) {
            throw Error(ErrorKind::too_large,
                        "naive enumeration needs " + std::to_string(order) + "^"
                            + std::to_string(k) + " assignments, budget is "
                            + std::to_string(_opts.node_budget));
          }
        }
        std::vector<Branch> branches(1);
        auto&               b = branches[0];
        auto                a = initial();
        while (true) {
          ++b.stats.nodes;
          bool ok = true;
          for (std::size_t r = 0; r < _p.relators().size() && ok; ++r) {
            ok = holds(r, a, b.stats);
          }
          if (ok) {
            record(a, b);
          }
          // Odometer over the unpinned generators, last one fastest.
          std::size_t d = k;
          while (d > 0) {
            auto g = _order[d - 1];
            if (++a[g] < order) {
              break;
            }
            a[g] = 0;
            --d;
          }
          if (d == 0) {
            break;
          }
        }
        return finish(branches);
      }

      HomSearchResult run_backtrack() {
        std::vector<Branch> root(1);
        auto                a = initial();
        for (auto r : _triggers[0]) {
          if (!holds(r, a, root[0].stats)) {
            return finish(root);
          }
        }
        if (_order.empty()) {
          record(a, root[0]);
          return finish(root);
        }

        auto const          width = _grp.order();
        std::vector<Branch> branches(width);
        std::atomic<std::size_t> next{0};
        std::atomic<bool>        stop{false};
        std::exception_ptr       error;
        std::mutex               error_mutex;

        auto worker = [&] {
          try {
            auto          local = a;
            std::uint64_t ticks = 0;
            while (!stop.load(std::memory_order_relaxed)) {
              auto v = next.fetch_add(1);
              if (v >= width) {
                break;
              }
              local[_order[0]] = static_cast<Index>(v);
              descend(1, local, branches[v], ticks, stop);
            }
            charge(ticks);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            stop = true;
          }
        };

        unsigned const jobs = std::max(1U, std::min<unsigned>(_opts.jobs, width));
        if (jobs == 1) {
          worker();
        } else {
          std::vector<std::thread> threads;
          threads.reserve(jobs);
          for (unsigned i = 0; i < jobs; ++i) {
            threads.emplace_back(worker);
          }
          for (auto& t : threads) {
            t.join();
          }
        }
        if (error) {
          std::rethrow_exception(error);
        }
        branches.insert(branches.begin(), std::move(root[0]));
        return finish(branches);
      }

      // `depth` generators of _order are assigned in `a`.
      void descend(std::size_t depth, std::vector<Index>& a, Branch& b, std::uint64_t& ticks,
                   std::atomic<bool> const& stop) {
        count_node(b, ticks, stop);
        for (auto r : _triggers[depth]) {
          if (!holds(r, a, b.stats)) {
            return;
          }
        }
        if (depth == _order.size()) {
          record(a, b);
          return;
        }
        auto const g = _order[depth];
        for (Index v = 0; v < _grp.order(); ++v) {
          a[g] = v;
          descend(depth + 1, a, b, ticks, stop);
        }
      }

      // Nodes are charged to the shared budget in batches of 1024 per worker.
      void count_node(Branch& b, std::uint64_t& ticks, std::atomic<bool> const& stop) {
        ++b.stats.nodes;
        if (++ticks == 1024) {
          if (stop.load(std::memory_order_relaxed)) {
            throw Error(ErrorKind::budget_exceeded, "search aborted");
          }
          charge(ticks);
        }
      }

      void charge(std::uint64_t& ticks) {
        auto const n = ticks;
        ticks        = 0;
        if (_visited.fetch_add(n) + n > _opts.node_budget) {
          throw Error(ErrorKind::budget_exceeded,
                      "more than " + std::to_string(_opts.node_budget) + " nodes");
        }
      }

      Presentation const&                      _p;
      FiniteGroup const&                       _grp;
      FiniteGroup::IndexView                   _view;
      SearchOptions                            _opts;
      std::vector<std::optional<Index>>        _pins;
      std::vector<std::pair<Word, Index>>      _targets;
      std::vector<GeneratorId>                 _order;
      std::vector<std::vector<std::size_t>>    _triggers;
      std::atomic<std::uint64_t>               _visited{0};
    };

  }  // namespace detail

  [[nodiscard]] inline HomSearchResult count_homs(Presentation const& p, FiniteGroup const& grp,
                                                  Constraint const&    c    = {},
                                                  SearchOptions const& opts = {}) {
    detail::HomSearch search(p, grp, c, opts);
    return search.run();
  }

  //! Constraint for phi(marker) = target: a marker that is a single
  //! generator is pinned, any other word is checked on complete assignments.
  [[nodiscard]] inline Constraint marker_constraint(Presentation const& p,
                                                    std::string const&  marker,
                                                    Permutation const&  target) {
    auto const& w = p.marker(marker);
    Constraint  c;
    if (w.syllable_count() == 1 && w.syllables()[0].exponent == 1) {
      c.pins.emplace(w.syllables()[0].generator, target);
    } else {
      c.word_targets.emplace_back(w, target);
    }
    return c;
  }

  //! Number of homomorphisms P -> grp sending the marker word to sigma.
  [[nodiscard]] inline std::uint64_t meridian_invariant(Presentation const& p,
                                                        std::string const&  marker,
                                                        FiniteGroup const&  grp,
                                                        Permutation const&  sigma,
                                                        SearchOptions const& opts = {}) {
    return count_homs(p, grp, marker_constraint(p, marker, sigma), opts).count;
  }

  //! Whether the homomorphism `assignment` sends w1 and w2 to conjugate
  //! elements. Throws InvalidParameter if the assignment is not a
  //! homomorphism.
  [[nodiscard]] inline bool images_conjugate(Presentation const& p, FiniteGroup const& grp,
                                             std::span<const Permutation> assignment,
                                             Word const& w1, Word const& w2) {
    if (!is_homomorphism(p, grp, assignment)) {
      throw Error(ErrorKind::invalid_parameter, "assignment is not a homomorphism");
    }
    return are_conjugate(evaluate(w1, assignment, grp), evaluate(w2, assignment, grp), grp);
  }

}  // namespace foxhom

#endif  // FOXHOM_HOM_SEARCH_HPP_
