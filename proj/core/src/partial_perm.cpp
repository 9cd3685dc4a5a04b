#include "groupoidal/partial_perm.hpp"

#include <algorithm>
#include <sstream>

#include "groupoidal/errors.hpp"

namespace groupoidal {

PartialPerm::PartialPerm(int degree) : images_(static_cast<size_t>(degree), 0) {
  if (degree < 1) {
    throw ValidationError("partial perm degree must be positive");
  }
}

PartialPerm PartialPerm::identity(int degree) {
  PartialPerm p(degree);
  for (int x = 1; x <= degree; ++x) {
    p.images_[x - 1] = x;
  }
  return p;
}

PartialPerm PartialPerm::partial_identity(int degree, const std::vector<int>& domain) {
  PartialPerm p(degree);
  for (int x : domain) {
    if (x < 1 || x > degree) {
      throw ValidationError("partial identity domain point out of range");
    }
    p.images_[x - 1] = x;
  }
  return p;
}

PartialPerm PartialPerm::from_images(std::vector<int> images) {
  if (images.empty()) {
    throw ValidationError("partial perm degree must be positive");
  }
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 0 || v > static_cast<int>(images.size())) {
      throw ValidationError("partial perm image out of range");
    }
    if (v != 0) {
      if (seen[v]) {
        throw ValidationError("partial perm images not injective");
      }
      seen[v] = true;
    }
  }
  PartialPerm p(static_cast<int>(images.size()));
  p.images_ = std::move(images);
  return p;
}

PartialPerm PartialPerm::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') {
    throw ParseError("partial perm must start with '[': " + text);
  }
  ++i;
  std::vector<int> images;
  while (true) {
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) {
      throw ParseError("expected digit in partial perm literal: " + text);
    }
    images.push_back(std::stoi(text.substr(i, j - i)));
    i = j;
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
    } else if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    } else {
      throw ParseError("expected ',' or ']' in partial perm literal: " + text);
    }
  }
  skip_ws();
  if (i != text.size()) {
    throw ParseError("trailing characters after partial perm literal: " + text);
  }
  return from_images(std::move(images));
}

int PartialPerm::rank() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(),
                                        [](int v) { return v != 0; }));
}

bool PartialPerm::is_idempotent() const {
  for (size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != 0 && images_[k] != static_cast<int>(k) + 1) {
      return false;
    }
  }
  return true;
}

PartialPerm PartialPerm::compose(const PartialPerm& g) const {
  if (degree() != g.degree()) {
    throw ValidationError("cannot compose partial perms of degrees " +
                          std::to_string(degree()) + " and " +
                          std::to_string(g.degree()));
  }
  PartialPerm out(degree());
  for (int x = 1; x <= degree(); ++x) {
    int y = g.image(x);
    out.images_[x - 1] = (y == 0) ? 0 : image(y);
  }
  return out;
}

PartialPerm PartialPerm::inverse() const {
  PartialPerm out(degree());
  for (int x = 1; x <= degree(); ++x) {
    int y = image(x);
    if (y != 0) {
      out.images_[y - 1] = x;
    }
  }
  return out;
}

std::string PartialPerm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < images_.size(); ++k) {
    if (k > 0) os << ',';
    os << images_[k];
  }
  os << ']';
  return os.str();
}

}  // namespace groupoidal
