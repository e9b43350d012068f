#include "centra/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "centra/error.hpp"

namespace centra {

  namespace {
    constexpr Elem kEmpty = ~Elem(0);

    inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }

    inline std::uint64_t finish(std::uint64_t h) noexcept {
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      return h;
    }

    std::uint64_t hash_points(Point const* p, std::size_t n) noexcept {
      std::uint64_t h = 0x84222325cbf29ce4ULL;
      for (std::size_t i = 0; i < n; ++i) {
        h = mix(h, p[i]);
      }
      return finish(h);
    }

    std::size_t next_pow2(std::size_t n) {
      std::size_t r = 16;
      while (r < n) {
        r <<= 1;
      }
      return r;
    }

    // Open-addressing set of rows of a growing flat image buffer, keyed by
    // the whole row. Used only while closing generators.
    class RowSet {
     public:
      explicit RowSet(std::size_t degree) : _degree(degree), _slots(1024, kEmpty) {}

      std::optional<Elem> find(std::vector<Point> const& data, Point const* row) const {
        std::size_t mask = _slots.size() - 1;
        for (std::size_t s = hash_points(row, _degree) & mask;; s = (s + 1) & mask) {
          Elem e = _slots[s];
          if (e == kEmpty) {
            return std::nullopt;
          }
          if (std::equal(row, row + _degree, data.data() + std::size_t(e) * _degree)) {
            return e;
          }
        }
      }

      void insert(std::vector<Point> const& data, Elem e, std::size_t count) {
        if (2 * (count + 1) > _slots.size()) {
          rehash(data, count);
        }
        place(data, e);
      }

     private:
      void place(std::vector<Point> const& data, Elem e) {
        std::size_t mask = _slots.size() - 1;
        Point const* row = data.data() + std::size_t(e) * _degree;
        std::size_t  s   = hash_points(row, _degree) & mask;
        while (_slots[s] != kEmpty) {
          s = (s + 1) & mask;
        }
        _slots[s] = e;
      }

      void rehash(std::vector<Point> const& data, std::size_t count) {
        _slots.assign(_slots.size() * 2, kEmpty);
        for (std::size_t e = 0; e < count; ++e) {
          place(data, static_cast<Elem>(e));
        }
      }

      std::size_t       _degree;
      std::vector<Elem> _slots;
    };
  }  // namespace

  GroupPtr FiniteGroup::close(std::vector<Perm> gens, ClosureOptions const& opts) {
    if (gens.empty()) {
      throw UsageError("close_generators: empty generator list");
    }
    std::size_t const degree = gens.front().degree();
    if (degree == 0) {
      throw UsageError("close_generators: generators of degree 0");
    }
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw UsageError("close_generators: generators have different degrees");
      }
    }

    std::vector<Point> data;
    data.reserve(degree * 64);
    auto id = Perm::identity(degree);
    data.insert(data.end(), id.images().begin(), id.images().end());
    std::size_t count = 1;
    RowSet      seen(degree);
    seen.insert(data, 0, 0);

    std::vector<Point> prod(degree);
    for (std::size_t i = 0; i < count; ++i) {
      for (auto const& g : gens) {
        Point const* e = data.data() + i * degree;
        // right multiplication by a generator: (e * g)[x] = e[g[x]]
        for (std::size_t x = 0; x < degree; ++x) {
          prod[x] = e[g[x]];
        }
        if (seen.find(data, prod.data())) {
          continue;
        }
        if (count >= opts.max_order) {
          throw CapExceeded("group too large: more than " + std::to_string(opts.max_order)
                                + " elements (enumerated " + std::to_string(count) + ")",
                            opts.max_order,
                            count);
        }
        if ((count + 1) * degree > opts.max_storage) {
          throw CapExceeded("group too large: element storage exceeds "
                                + std::to_string(opts.max_storage) + " entries",
                            opts.max_storage,
                            count);
        }
        data.insert(data.end(), prod.begin(), prod.end());
        seen.insert(data, static_cast<Elem>(count), count);
        ++count;
      }
    }

    // Canonical order: lexicographic on image arrays.
    std::vector<Elem> perm(count);
    std::iota(perm.begin(), perm.end(), Elem(0));
    std::sort(perm.begin(), perm.end(), [&](Elem a, Elem b) {
      auto pa = data.data() + std::size_t(a) * degree;
      auto pb = data.data() + std::size_t(b) * degree;
      return std::lexicographical_compare(pa, pa + degree, pb, pb + degree);
    });
    std::vector<Point> sorted(count * degree);
    for (std::size_t k = 0; k < count; ++k) {
      std::copy_n(data.data() + std::size_t(perm[k]) * degree, degree,
                  sorted.data() + k * degree);
    }
    data = std::vector<Point>();

    return std::make_shared<FiniteGroup>(
        Token{}, degree, std::move(gens), std::move(sorted), count, opts);
  }

  FiniteGroup::FiniteGroup(Token,
                           std::size_t         degree,
                           std::vector<Perm>   gens,
                           std::vector<Point>  images,
                           std::size_t         order,
                           ClosureOptions const& opts)
      : _degree(degree),
        _order(order),
        _gens(std::move(gens)),
        _images(std::move(images)),
        _opts(opts) {
    build_index();
    _gen_elems.reserve(_gens.size());
    for (auto const& g : _gens) {
      _gen_elems.push_back(index_of(g));
    }
    if (_order <= _opts.table_limit) {
      build_table();
    }
  }

  void FiniteGroup::build_index() {
    // Greedy base: points whose images pin down every element.
    std::vector<Elem> moving(_order > 0 ? _order - 1 : 0);
    std::iota(moving.begin(), moving.end(), Elem(1));
    for (Point x = 0; x < _degree && !moving.empty(); ++x) {
      bool moved = std::any_of(moving.begin(), moving.end(),
                               [&](Elem e) { return images(e)[x] != x; });
      if (!moved) {
        continue;
      }
      _base.push_back(x);
      std::erase_if(moving, [&](Elem e) { return images(e)[x] != x; });
    }
    if (_base.empty()) {
      _base.push_back(0);
    }

    _slots.assign(next_pow2(2 * _order), kEmpty);
    _slot_mask = _slots.size() - 1;
    std::vector<Point> key(_base.size());
    for (Elem e = 0; e < _order; ++e) {
      auto im = images(e);
      for (std::size_t k = 0; k < _base.size(); ++k) {
        key[k] = im[_base[k]];
      }
      std::size_t s = hash_points(key.data(), key.size()) & _slot_mask;
      while (_slots[s] != kEmpty) {
        s = (s + 1) & _slot_mask;
      }
      _slots[s] = e;
    }

    _inverse.resize(_order);
    std::vector<Point> inv(_degree);
    for (Elem e = 0; e < _order; ++e) {
      auto im = images(e);
      for (std::size_t x = 0; x < _degree; ++x) {
        inv[im[x]] = static_cast<Point>(x);
      }
      for (std::size_t k = 0; k < _base.size(); ++k) {
        key[k] = inv[_base[k]];
      }
      auto found = lookup_key(key.data());
      assert(found);
      _inverse[e] = *found;
    }
  }

  std::optional<Elem> FiniteGroup::lookup_key(Point const* key) const noexcept {
    std::size_t const b = _base.size();
    for (std::size_t s = hash_points(key, b) & _slot_mask;; s = (s + 1) & _slot_mask) {
      Elem e = _slots[s];
      if (e == kEmpty) {
        return std::nullopt;
      }
      auto im    = images(e);
      bool match = true;
      for (std::size_t k = 0; k < b; ++k) {
        if (im[_base[k]] != key[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        return e;
      }
    }
  }

  void FiniteGroup::build_table() {
    _table.resize(_order * _order);
    for (Elem a = 0; a < _order; ++a) {
      for (Elem b = 0; b < _order; ++b) {
        _table[std::size_t(a) * _order + b] = mul_slow(a, b);
      }
    }
    _has_table = true;
  }

  Elem FiniteGroup::mul_slow(Elem a, Elem b) const noexcept {
    constexpr std::size_t kInline = 16;
    Point                 buf[kInline] = {};
    std::vector<Point>    heap;
    Point*                key = buf;
    if (_base.size() > kInline) {
      heap.resize(_base.size());
      key = heap.data();
    }
    auto ia = images(a);
    auto ib = images(b);
    for (std::size_t k = 0; k < _base.size(); ++k) {
      key[k] = ia[ib[_base[k]]];
    }
    auto found = lookup_key(key);
    assert(found);
    return *found;
  }

  Perm FiniteGroup::element(Elem e) const {
    auto im = images(e);
    return Perm(std::vector<Point>(im.begin(), im.end()));
  }

  std::optional<Elem> FiniteGroup::find(Perm const& p) const {
    if (p.degree() != _degree) {
      return std::nullopt;
    }
    std::vector<Point> key(_base.size());
    for (std::size_t k = 0; k < _base.size(); ++k) {
      key[k] = p[_base[k]];
    }
    auto found = lookup_key(key.data());
    if (!found) {
      return std::nullopt;
    }
    auto im = images(*found);
    if (!std::equal(im.begin(), im.end(), p.images().begin())) {
      return std::nullopt;
    }
    return found;
  }

  Elem FiniteGroup::index_of(Perm const& p) const {
    auto found = find(p);
    if (!found) {
      throw UsageError("permutation " + p.to_cycles() + " is not in the group");
    }
    return *found;
  }

  Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
    std::int64_t const n = element_order(a);
    k %= n;
    if (k < 0) {
      k += n;
    }
    Elem result = identity();
    Elem base   = a;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::vector<std::uint32_t> const& FiniteGroup::element_orders() const {
    std::call_once(_orders_once, [this] {
      _orders.assign(_order, 0);
      for (Elem e = 0; e < _order; ++e) {
        if (_orders[e] != 0) {
          continue;
        }
        std::uint32_t k = 1;
        for (Elem x = e; x != identity(); x = mul(x, e)) {
          ++k;
        }
        _orders[e] = k;
      }
    });
    return _orders;
  }

  std::uint32_t FiniteGroup::element_order(Elem e) const {
    return element_orders()[e];
  }

  bool FiniteGroup::is_abelian() const {
    std::call_once(_abelian_once, [this] {
      _abelian = true;
      for (std::size_t i = 0; i < _gen_elems.size() && _abelian; ++i) {
        for (std::size_t j = i + 1; j < _gen_elems.size(); ++j) {
          if (!commute(_gen_elems[i], _gen_elems[j])) {
            _abelian = false;
            break;
          }
        }
      }
    });
    return _abelian;
  }

  ElementSet FiniteGroup::all() const {
    ElementSet s(_order);
    s.fill();
    return s;
  }

  ElementSet FiniteGroup::trivial() const {
    ElementSet s(_order);
    s.set(identity());
    return s;
  }

  bool FiniteGroup::small_enough_for_caches() const noexcept {
    return _order <= 4096;
  }

  ElementSet FiniteGroup::centralizer_of(Elem e) const {
    if (small_enough_for_caches()) {
      std::call_once(_centralizers_once, [this] {
        _centralizers.assign(_order, ElementSet(_order));
        for (Elem a = 0; a < _order; ++a) {
          for (Elem b = a; b < _order; ++b) {
            if (commute(a, b)) {
              _centralizers[a].set(b);
              _centralizers[b].set(a);
            }
          }
        }
      });
      return _centralizers[e];
    }
    ElementSet c(_order);
    for (Elem g = 0; g < _order; ++g) {
      if (commute(g, e)) {
        c.set(g);
      }
    }
    return c;
  }

  ElementSet FiniteGroup::cyclic_of(Elem e) const {
    auto make = [this](Elem x) {
      ElementSet c(_order);
      Elem       y = identity();
      do {
        c.set(y);
        y = mul(y, x);
      } while (y != identity());
      return c;
    };
    if (small_enough_for_caches()) {
      std::call_once(_cyclics_once, [&] {
        _cyclics.reserve(_order);
        for (Elem a = 0; a < _order; ++a) {
          _cyclics.push_back(make(a));
        }
      });
      return _cyclics[e];
    }
    return make(e);
  }

  std::vector<std::vector<Elem>> const& FiniteGroup::conjugacy_classes() const {
    std::call_once(_classes_once, [this] {
      constexpr std::uint32_t kNone = ~std::uint32_t(0);
      _class_of.assign(_order, kNone);
      std::vector<Elem> queue;
      for (Elem x = 0; x < _order; ++x) {
        if (_class_of[x] != kNone) {
          continue;
        }
        auto const id = static_cast<std::uint32_t>(_classes.size());
        queue.assign(1, x);
        _class_of[x] = id;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (Elem g : _gen_elems) {
            Elem y = conj(queue[i], g);
            if (_class_of[y] == kNone) {
              _class_of[y] = id;
              queue.push_back(y);
            }
          }
        }
        std::sort(queue.begin(), queue.end());
        _class_reps.push_back(queue.front());
        _classes.push_back(queue);
      }
    });
    return _classes;
  }

  std::vector<Elem> const& FiniteGroup::class_representatives() const {
    conjugacy_classes();
    return _class_reps;
  }

  std::size_t FiniteGroup::class_index(Elem e) const {
    conjugacy_classes();
    return _class_of[e];
  }

  ElementSet const& FiniteGroup::center_set() const {
    std::call_once(_center_once, [this] {
      _center = ElementSet(_order);
      for (Elem g = 0; g < _order; ++g) {
        bool central = true;
        for (Elem s : _gen_elems) {
          if (!commute(g, s)) {
            central = false;
            break;
          }
        }
        if (central) {
          _center.set(g);
        }
      }
    });
    return _center;
  }

  SubgroupRef::SubgroupRef(GroupPtr parent, ElementSet members)
      : _parent(std::move(parent)), _members(std::move(members)) {
    assert(_parent != nullptr);
    assert(_members.universe() == _parent->order());
    assert(_members.test(FiniteGroup::identity()));
    assert(_parent->order() % _members.count() == 0);
  }

  GroupPtr trivial_group() {
    return FiniteGroup::close({Perm::identity(1)});
  }

}  // namespace centra
