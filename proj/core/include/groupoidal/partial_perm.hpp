#ifndef GROUPOIDAL_PARTIAL_PERM_HPP_
#define GROUPOIDAL_PARTIAL_PERM_HPP_

#include <compare>
#include <string>
#include <vector>

namespace groupoidal {

// An injective partial map on {1..n}. images()[k] is the image of the point
// k + 1, with 0 standing for "undefined". The images array is the canonical
// form used for hashing and interning.
class PartialPerm {
 public:
  // The empty map of the given degree.
  explicit PartialPerm(int degree);

  static PartialPerm identity(int degree);
  // Identity on a subset of {1..degree}.
  static PartialPerm partial_identity(int degree, const std::vector<int>& domain);
  static PartialPerm from_images(std::vector<int> images);
  // Parses the bracketed image-list form, e.g. "[2,0]" = {1 -> 2}.
  static PartialPerm parse(const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int pt) const { return images_[pt - 1]; }
  bool defined(int pt) const { return images_[pt - 1] != 0; }
  int rank() const;
  bool is_idempotent() const;

  // (f.compose(g))(x) = f(g(x)); both factors must have equal degree.
  PartialPerm compose(const PartialPerm& g) const;
  PartialPerm inverse() const;

  const std::vector<int>& images() const { return images_; }
  std::string to_string() const;

  friend auto operator<=>(const PartialPerm&, const PartialPerm&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace groupoidal

#endif  // GROUPOIDAL_PARTIAL_PERM_HPP_
