#include "centra/action.hpp"

#include <algorithm>

#include "centra/error.hpp"

namespace centra {

  namespace {
    constexpr Elem kUnset = ~Elem(0);
  }

  ElemMap extend_homomorphism(FiniteGroup const&    src,
                              FiniteGroup const&    dst,
                              std::span<Elem const> generator_images) {
    auto const& gens = src.generator_elements();
    if (generator_images.size() != gens.size()) {
      throw UsageError("homomorphism: expected " + std::to_string(gens.size())
                       + " generator images, got " + std::to_string(generator_images.size()));
    }
    for (Elem y : generator_images) {
      if (y >= dst.order()) {
        throw UsageError("homomorphism: generator image out of range");
      }
    }
    ElemMap map(src.order(), kUnset);
    map[FiniteGroup::identity()] = FiniteGroup::identity();
    std::vector<Elem> queue{FiniteGroup::identity()};
    // Every edge x -> x g must satisfy map(x g) = map(x) map(g).
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem xg    = src.mul(x, gens[k]);
        Elem image = dst.mul(map[x], generator_images[k]);
        if (map[xg] == kUnset) {
          map[xg] = image;
          queue.push_back(xg);
        } else if (map[xg] != image) {
          throw UsageError("homomorphism: generator images do not extend to a homomorphism");
        }
      }
    }
    return map;
  }

  ElemMap automorphism_from_generators(FiniteGroup const& N, std::span<Elem const> images) {
    auto map = extend_homomorphism(N, N, images);
    auto sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw UsageError("automorphism: generator images define a non-injective endomorphism");
    }
    return map;
  }

  ElemMap power_automorphism(FiniteGroup const& N, std::span<std::int64_t const> exponents) {
    auto const& gens = N.generator_elements();
    if (exponents.size() != gens.size()) {
      throw UsageError("power automorphism: expected " + std::to_string(gens.size())
                       + " exponents");
    }
    std::vector<Elem> images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images.push_back(N.pow(gens[i], exponents[i]));
    }
    return automorphism_from_generators(N, images);
  }

  bool is_automorphism(FiniteGroup const& N, ElemMap const& map) {
    if (map.size() != N.order()) {
      return false;
    }
    std::vector<bool> hit(N.order(), false);
    for (Elem y : map) {
      if (y >= N.order() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Elem a = 0; a < N.order(); ++a) {
      for (Elem b = 0; b < N.order(); ++b) {
        if (map[N.mul(a, b)] != N.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  ActionSpec::ActionSpec(GroupPtr acting, GroupPtr target, std::vector<ElemMap> generator_images)
      : _acting(std::move(acting)),
        _target(std::move(target)),
        _gen_images(std::move(generator_images)) {
    if (!_acting || !_target) {
      throw UsageError("action: missing acting or target group");
    }
    auto const& hgens = _acting->generator_elements();
    if (_gen_images.size() != hgens.size()) {
      throw UsageError("action: expected an image for each of the "
                       + std::to_string(hgens.size()) + " acting generators");
    }
    for (auto const& img : _gen_images) {
      if (!is_automorphism(*_target, img)) {
        throw UsageError("action: a generator image is not an automorphism of the target");
      }
    }

    std::size_t const n = _target->order();
    _phi.assign(_acting->order() * n, kUnset);
    auto slot = [&](Elem h) { return _phi.begin() + std::ptrdiff_t(h * n); };
    for (Elem x = 0; x < n; ++x) {
      _phi[x] = x;
    }
    std::vector<bool> done(_acting->order(), false);
    done[0] = true;
    std::vector<Elem> queue{0};
    std::vector<Elem> composed(n);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem h = queue[i];
      for (std::size_t k = 0; k < hgens.size(); ++k) {
        // φ(h g) = φ(h) ∘ φ(g)
        auto const& pg = _gen_images[k];
        auto        ph = slot(h);
        for (Elem x = 0; x < n; ++x) {
          composed[x] = ph[pg[x]];
        }
        Elem hg = _acting->mul(h, hgens[k]);
        if (!done[hg]) {
          done[hg] = true;
          std::copy(composed.begin(), composed.end(), slot(hg));
          queue.push_back(hg);
        } else if (!std::equal(composed.begin(), composed.end(), slot(hg))) {
          throw UsageError("action: generator images do not define a homomorphism into Aut(N)");
        }
      }
    }
  }

  GroupPtr semidirect(ActionSpec const& spec, ClosureOptions const& opts) {
    auto const&       N  = *spec.target();
    auto const&       H  = *spec.acting();
    std::size_t const nh = H.order();
    std::size_t const n  = N.order() * nh;

    // left multiplication by (n1, h1)
    auto left = [&](Elem n1, Elem h1) {
      std::vector<Point> images(n);
      for (Elem n2 = 0; n2 < N.order(); ++n2) {
        Elem const moved = N.mul(n1, spec.apply(h1, n2));
        for (Elem h2 = 0; h2 < nh; ++h2) {
          images[std::size_t(n2) * nh + h2]
              = static_cast<Point>(std::size_t(moved) * nh + H.mul(h1, h2));
        }
      }
      return Perm(std::move(images));
    };

    std::vector<Perm> gens;
    for (Elem g : N.generator_elements()) {
      gens.push_back(left(g, FiniteGroup::identity()));
    }
    for (Elem g : H.generator_elements()) {
      gens.push_back(left(FiniteGroup::identity(), g));
    }
    return FiniteGroup::close(std::move(gens), opts);
  }

}  // namespace centra
