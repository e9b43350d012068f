#include "centra/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "centra/error.hpp"

namespace centra {

  Perm::Perm(std::vector<Point> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (Point x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw UsageError("image array is not a bijection on {0, ..., "
                         + std::to_string(_images.size()) + " - 1}");
      }
      seen[x] = true;
    }
  }

  Perm Perm::identity(std::size_t degree) {
    Perm result;
    result._images.resize(degree);
    std::iota(result._images.begin(), result._images.end(), Point(0));
    return result;
  }

  Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
    // First pass collects the cycles, second pass multiplies them out once
    // the degree is known.
    std::vector<std::vector<Point>> cycles;
    std::size_t max_point = 0;
    std::size_t i = 0;
    auto skip_blanks = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_blanks();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw UsageError("cycle notation: expected '(' at offset "
                         + std::to_string(i) + " in \"" + std::string(text) + "\"");
      }
      ++i;
      std::vector<Point> cycle;
      while (true) {
        while (i < text.size()
               && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) {
          ++i;
        }
        if (i >= text.size()) {
          throw UsageError("cycle notation: unterminated cycle in \""
                           + std::string(text) + "\"");
        }
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw UsageError("cycle notation: unexpected character '"
                           + std::string(1, text[i]) + "'");
        }
        std::size_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<std::size_t>(text[i] - '0');
          ++i;
        }
        if (value == 0) {
          throw UsageError("cycle notation: points are 1-based");
        }
        cycle.push_back(static_cast<Point>(value - 1));
        max_point = std::max(max_point, value);
      }
      auto sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError("cycle notation: repeated point inside a cycle");
      }
      cycles.push_back(std::move(cycle));
      skip_blanks();
    }

    std::size_t const n = std::max(degree, max_point);
    Perm result = identity(n);
    // Right-most cycle acts first.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      auto const& c = *it;
      if (c.size() < 2) {
        continue;
      }
      Perm cyc = identity(n);
      for (std::size_t k = 0; k < c.size(); ++k) {
        cyc._images[c[k]] = c[(k + 1) % c.size()];
      }
      result = compose(cyc, result);
    }
    return result;
  }

  Perm Perm::inverse() const {
    Perm result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[_images[i]] = static_cast<Point>(i);
    }
    return result;
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Perm::order() const {
    std::vector<bool> seen(_images.size(), false);
    std::size_t result = 1;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string Perm::to_cycles() const {
    std::string out;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == i) {
        continue;
      }
      out += '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        if (!first) {
          out += ',';
        }
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Perm compose(Perm const& p, Perm const& q) {
    if (p.degree() != q.degree()) {
      throw UsageError("cannot compose permutations of degree "
                       + std::to_string(p.degree()) + " and "
                       + std::to_string(q.degree()));
    }
    std::vector<Point> images(p.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = p[q[i]];
    }
    return Perm(std::move(images));
  }

  Perm extend_degree(Perm const& p, std::size_t degree) {
    if (degree < p.degree()) {
      throw UsageError("extend_degree: target degree is smaller");
    }
    std::vector<Point> images(p.images().begin(), p.images().end());
    for (std::size_t i = p.degree(); i < degree; ++i) {
      images.push_back(static_cast<Point>(i));
    }
    return Perm(std::move(images));
  }

  Perm shift(Perm const& p, std::size_t offset, std::size_t degree) {
    if (offset + p.degree() > degree) {
      throw UsageError("shift: support does not fit");
    }
    Perm result = Perm::identity(degree);
    std::vector<Point> images(result.images().begin(), result.images().end());
    for (std::size_t i = 0; i < p.degree(); ++i) {
      images[offset + i] = static_cast<Point>(offset + p[i]);
    }
    return Perm(std::move(images));
  }

}  // namespace centra
