#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uvbraid {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range word token. `position` is the 0-based token index.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &what)
      : Error("token " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Strand count n and number of crossing types c of UV_n(c).
struct Params {
  int n = 2;
  int c = 1;

  /// Throws Error unless n >= 1 and c >= 1.
  void validate() const;

  friend bool operator==(const Params &, const Params &) = default;
};

enum class LetterKind : std::uint8_t { Rho, Sigma };

/// One generator letter: rho_i, or sigma_{i,t}^{+-1}.
/// Rho letters are involutions and always carry sign +1.
struct UVLetter {
  LetterKind kind = LetterKind::Rho;
  int i = 1;
  int t = 0;
  int sign = 1;

  static constexpr UVLetter rho(int i) { return {LetterKind::Rho, i, 0, 1}; }
  static constexpr UVLetter sigma(int i, int t, int sign = 1) {
    return {LetterKind::Sigma, i, t, sign};
  }

  bool is_rho() const noexcept { return kind == LetterKind::Rho; }
  UVLetter inverse() const noexcept { return is_rho() ? *this : sigma(i, t, -sign); }

  friend auto operator<=>(const UVLetter &, const UVLetter &) = default;
};

class UVWord {
public:
  explicit UVWord(Params params) : params_(params) { params_.validate(); }

  /// Throws Error if any letter is out of range for `params`.
  UVWord(Params params, std::vector<UVLetter> letters);

  const Params &params() const noexcept { return params_; }
  std::span<const UVLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const UVLetter &operator[](std::size_t k) const { return letters_[k]; }

  /// Appends after bounds checking.
  void push_back(UVLetter letter);
  void append(const UVWord &other);

  UVWord inverse() const;

  friend bool operator==(const UVWord &, const UVWord &) = default;

private:
  Params params_;
  std::vector<UVLetter> letters_;
};

UVWord operator*(const UVWord &a, const UVWord &b);

/// Throws Error if the letter is out of range for `params`.
void check_letter(const UVLetter &letter, const Params &params);

/// Tokens: `r<i>` rho_i, `s<i>.<t>` sigma_{i,t}, `S<i>.<t>` its inverse;
/// `R<i>` is accepted as rho_i.
UVWord parse_word(std::string_view text, Params params);

std::string to_token(const UVLetter &letter);
std::string to_string(const UVWord &word);

/// Cancels adjacent rho_i rho_i and sigma sigma^{-1} pairs until none remain.
UVWord free_reduce(const UVWord &word);

} // namespace uvbraid
