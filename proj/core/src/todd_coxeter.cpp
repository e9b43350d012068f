#include "centra/todd_coxeter.hpp"

#include <algorithm>

#include "centra/error.hpp"

namespace centra {

  namespace {
    std::size_t column_of(Letter x) {
      return x > 0 ? 2 * std::size_t(x - 1) : 2 * std::size_t(-x - 1) + 1;
    }
    std::size_t inverse_column(std::size_t col) {
      return col ^ 1U;
    }
  }  // namespace

  CosetTable::CosetTable(std::size_t generators, std::vector<std::uint32_t> entries)
      : _gens(generators), _entries(std::move(entries)) {
    if (_gens != 0 && _entries.size() % columns() != 0) {
      throw UsageError("CosetTable: entry count is not a multiple of the column count");
    }
  }

  std::uint32_t CosetTable::trace(std::uint32_t c, Word const& w) const noexcept {
    for (Letter x : w) {
      if (c == undefined) {
        return undefined;
      }
      c = (*this)(c, column_of(x));
    }
    return c;
  }

  bool CosetTable::is_closed(std::vector<Word> const& relators) const {
    if (std::find(_entries.begin(), _entries.end(), undefined) != _entries.end()) {
      return false;
    }
    for (std::uint32_t c = 0; c < cosets(); ++c) {
      for (auto const& w : relators) {
        if (trace(c, w) != c) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Perm> CosetTable::generator_perms() const {
    std::vector<Perm> out;
    std::size_t const n = cosets();
    for (std::size_t g = 0; g < _gens; ++g) {
      std::vector<Point> images(n);
      for (std::size_t c = 0; c < n; ++c) {
        images[c] = (*this)(c, 2 * g + 1);
      }
      out.emplace_back(std::move(images));
    }
    return out;
  }

  namespace {
    class Enumerator {
     public:
      Enumerator(std::size_t gens, std::vector<Word> relators, std::size_t max_cosets)
          : _cols(2 * gens), _relators(std::move(relators)), _max(max_cosets) {
        _table.assign(_cols, CosetTable::undefined);
        _parent.push_back(0);
      }

      bool run() {
        // A pass can leave earlier rows incomplete after a late coincidence;
        // repeat until a pass changes nothing.
        while (true) {
          for (std::uint32_t c = 0; c < count(); ++c) {
            if (!live(c)) {
              continue;
            }
            for (auto const& w : _relators) {
              if (!scan_and_fill(c, w)) {
                return false;
              }
              if (!live(c)) {
                break;
              }
            }
            if (!live(c)) {
              continue;
            }
            for (std::size_t x = 0; x < _cols; ++x) {
              if (at(c, x) == CosetTable::undefined && !define(c, x)) {
                return false;
              }
            }
          }
          if (stable()) {
            return true;
          }
        }
      }

      std::size_t defined() const {
        return count();
      }

      CosetTable compact() const {
        std::vector<std::uint32_t> renumber(count(), CosetTable::undefined);
        std::uint32_t              n = 0;
        for (std::uint32_t c = 0; c < count(); ++c) {
          if (live(c)) {
            renumber[c] = n++;
          }
        }
        std::vector<std::uint32_t> entries;
        entries.reserve(std::size_t(n) * _cols);
        for (std::uint32_t c = 0; c < count(); ++c) {
          if (live(c)) {
            for (std::size_t x = 0; x < _cols; ++x) {
              entries.push_back(renumber[at(c, x)]);
            }
          }
        }
        return CosetTable(_cols / 2, std::move(entries));
      }

     private:
      std::uint32_t count() const {
        return static_cast<std::uint32_t>(_parent.size());
      }
      bool live(std::uint32_t c) const {
        return _parent[c] == c;
      }
      std::uint32_t& at(std::uint32_t c, std::size_t x) {
        return _table[std::size_t(c) * _cols + x];
      }
      std::uint32_t at(std::uint32_t c, std::size_t x) const {
        return _table[std::size_t(c) * _cols + x];
      }

      bool stable() const {
        for (std::uint32_t c = 0; c < count(); ++c) {
          if (!live(c)) {
            continue;
          }
          for (std::size_t x = 0; x < _cols; ++x) {
            std::uint32_t const d = at(c, x);
            if (d == CosetTable::undefined || !live(d)) {
              return false;
            }
          }
        }
        for (std::uint32_t c = 0; c < count(); ++c) {
          if (!live(c)) {
            continue;
          }
          for (auto const& w : _relators) {
            std::uint32_t e = c;
            for (Letter l : w) {
              e = at(e, column_of(l));
            }
            if (e != c) {
              return false;
            }
          }
        }
        return true;
      }

      bool define(std::uint32_t c, std::size_t x) {
        if (count() >= _max) {
          return false;
        }
        std::uint32_t const d = count();
        _parent.push_back(d);
        _table.resize(_table.size() + _cols, CosetTable::undefined);
        at(c, x)                 = d;
        at(d, inverse_column(x)) = c;
        return true;
      }

      std::uint32_t rep(std::uint32_t c) {
        std::uint32_t r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          std::uint32_t const next = _parent[c];
          _parent[c]               = r;
          c                        = next;
        }
        return r;
      }

      void merge(std::uint32_t k, std::uint32_t l) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        std::uint32_t const lo = std::min(k, l);
        std::uint32_t const hi = std::max(k, l);
        _parent[hi]            = lo;
        _queue.push_back(hi);
      }

      void coincidence(std::uint32_t a, std::uint32_t b) {
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          std::uint32_t const e = _queue[i];
          for (std::size_t x = 0; x < _cols; ++x) {
            std::uint32_t const f = at(e, x);
            if (f == CosetTable::undefined) {
              continue;
            }
            std::size_t const xi = inverse_column(x);
            if (at(f, xi) == e) {
              at(f, xi) = CosetTable::undefined;
            }
            std::uint32_t const e1 = rep(e);
            std::uint32_t const f1 = rep(f);
            if (at(e1, x) != CosetTable::undefined) {
              merge(f1, at(e1, x));
            } else if (at(f1, xi) != CosetTable::undefined) {
              merge(e1, at(f1, xi));
            } else {
              at(e1, x)  = f1;
              at(f1, xi) = e1;
            }
          }
        }
        _queue.clear();
      }

      bool scan_and_fill(std::uint32_t c, Word const& w) {
        if (w.empty()) {
          return true;
        }
        std::uint32_t f = c;
        std::uint32_t b = c;
        std::size_t   i = 0;
        std::size_t   j = w.size();  // one past the last unscanned letter
        while (true) {
          while (i < j && at(f, column_of(w[i])) != CosetTable::undefined) {
            f = at(f, column_of(w[i]));
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j > i && at(b, inverse_column(column_of(w[j - 1]))) != CosetTable::undefined) {
            b = at(b, inverse_column(column_of(w[j - 1])));
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            std::size_t const x = column_of(w[i]);
            at(f, x)            = b;
            at(b, inverse_column(x)) = f;
            return true;
          }
          if (!define(f, column_of(w[i]))) {
            return false;
          }
        }
      }

      std::size_t                _cols;
      std::vector<Word>          _relators;
      std::size_t                _max;
      std::vector<std::uint32_t> _table;
      std::vector<std::uint32_t> _parent;
      std::vector<std::uint32_t> _queue;
    };
  }  // namespace

  Enumeration todd_coxeter(Presentation const& P, Convention c, ToddCoxeterOptions const& opts) {
    if (opts.max_cosets < 1) {
      throw UsageError("todd_coxeter: max_cosets must be at least 1");
    }
    Enumeration out;
    std::size_t const gens = P.generators().size();
    if (gens == 0) {
      out.complete = true;
      out.defined  = 1;
      out.table    = CosetTable(0, {});
      return out;
    }
    Enumerator e(gens, P.relators(c), opts.max_cosets);
    out.complete = e.run();
    out.defined  = e.defined();
    if (out.complete) {
      out.table = e.compact();
    }
    return out;
  }

  Realization realize(Presentation const&        P,
                      ConventionChoice           choice,
                      std::optional<std::size_t> order_hint,
                      ToddCoxeterOptions const&  opts) {
    Realization r;
    Enumeration ea;
    Enumeration eb;
    if (choice != ConventionChoice::B) {
      ea = todd_coxeter(P, Convention::A, opts);
      if (ea.complete) {
        r.order_a = ea.table.cosets();
      }
    }
    if (choice != ConventionChoice::A) {
      eb = todd_coxeter(P, Convention::B, opts);
      if (eb.complete) {
        r.order_b = eb.table.cosets();
      }
    }
    if (!r.order_a && !r.order_b) {
      throw CapExceeded("coset enumeration inconclusive: more than "
                            + std::to_string(opts.max_cosets) + " cosets defined",
                        opts.max_cosets,
                        std::max(ea.defined, eb.defined));
    }
    bool use_b = false;
    if (!r.order_a) {
      use_b = true;
    } else if (r.order_b) {
      if (order_hint && *r.order_a != *order_hint && *r.order_b == *order_hint) {
        use_b = true;
      } else if (!(order_hint && *r.order_a == *order_hint)) {
        use_b = *r.order_b > *r.order_a;
      }
    }
    r.convention            = use_b ? Convention::B : Convention::A;
    CosetTable const& table = use_b ? eb.table : ea.table;
    if (table.generators() == 0 || table.cosets() == 1) {
      r.group = trivial_group();
    } else {
      r.group = close_generators(table.generator_perms());
    }
    return r;
  }

}  // namespace centra
