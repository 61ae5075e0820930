#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltc/root_system.hpp"

namespace ltc {

/// An element of the hyperoctahedral Weyl group W(C_n), acting on the
/// basis by w(e_j) = sign_j * e_(perm(j)).  Stored in one-line notation
/// as signed 1-based images: image(j) = sign_j * perm(j).
///
/// Composition is "apply right first": (u * v)(x) = u(v(x)).
///
/// Textual form: "[-3,+1,-2]" means e_1 -> -e_3, e_2 -> +e_1, e_3 -> -e_2.
class SignedPermutation {
public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    validate();
  }

  static SignedPermutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j + 1;
    return SignedPermutation(std::move(img));
  }

  /// -id: every sign flipped, no coordinate moved (the longest element).
  static SignedPermutation minus_identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = -(j + 1);
    return SignedPermutation(std::move(img));
  }

  int rank() const { return static_cast<int>(img_.size()); }

  /// Signed image of e_(j+1) for 0-based j; |image| is 1-based.
  int image(int j) const { return img_[static_cast<std::size_t>(j)]; }
  int target(int j) const { return std::abs(image(j)) - 1; } // 0-based
  int sign(int j) const { return image(j) > 0 ? 1 : -1; }

  friend SignedPermutation operator*(const SignedPermutation& u,
                                     const SignedPermutation& v) {
    if (u.rank() != v.rank())
      throw std::invalid_argument("SignedPermutation: rank mismatch");
    const int n = u.rank();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      int mid = v.target(j);
      img[static_cast<std::size_t>(j)] = v.sign(j) * u.sign(mid) * (u.target(mid) + 1);
    }
    return SignedPermutation(std::move(img));
  }

  SignedPermutation inverse() const {
    const int n = rank();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      img[static_cast<std::size_t>(target(j))] = sign(j) * (j + 1);
    return SignedPermutation(std::move(img));
  }

  bool is_identity() const {
    for (int j = 0; j < rank(); ++j)
      if (image(j) != j + 1) return false;
    return true;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ < b.img_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int j = 0; j < rank(); ++j) {
      if (j) out += ",";
      out += image(j) > 0 ? "+" : "-";
      out += std::to_string(std::abs(image(j)));
    }
    return out + "]";
  }

  /// Parses the to_string form; "+" signs are optional.
  static SignedPermutation parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw std::invalid_argument("SignedPermutation: bad format '" + s + "'");
    std::vector<int> img;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      if (tok.empty()) throw std::invalid_argument("SignedPermutation: empty token");
      img.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return SignedPermutation(std::move(img));
  }

private:
  void validate() const {
    const int n = rank();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      int t = std::abs(img_[static_cast<std::size_t>(j)]);
      if (t < 1 || t > n || seen[static_cast<std::size_t>(t - 1)])
        throw std::invalid_argument("SignedPermutation: not a signed bijection");
      seen[static_cast<std::size_t>(t - 1)] = true;
    }
  }

  std::vector<int> img_;
};

/// Linear action on weights: (w.lambda)_(perm(j)) = sign_j * lambda_j.
inline Weight act(const SignedPermutation& w, const Weight& lambda) {
  if (w.rank() != lambda.rank())
    throw std::invalid_argument("act: rank mismatch");
  std::vector<int> out(static_cast<std::size_t>(lambda.rank()), 0);
  for (int j = 0; j < lambda.rank(); ++j)
    out[static_cast<std::size_t>(w.target(j))] = w.sign(j) * lambda[j];
  return Weight(std::move(out));
}

} // namespace ltc
