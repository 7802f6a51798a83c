#include "uvbraid/words.hpp"

#include <cctype>
#include <charconv>

namespace uvbraid {

void Params::validate() const {
  if (n < 1)
    throw Error("strand count n must be >= 1, got " + std::to_string(n));
  if (c < 1)
    throw Error("crossing-type count c must be >= 1, got " + std::to_string(c));
}

void check_letter(const UVLetter &letter, const Params &params) {
  if (letter.i < 1 || letter.i > params.n - 1)
    throw Error("strand index " + std::to_string(letter.i) + " outside 1.." +
                std::to_string(params.n - 1));
  if (letter.is_rho()) {
    if (letter.sign != 1 || letter.t != 0)
      throw Error("rho letters carry neither sign nor crossing type");
    return;
  }
  if (letter.t < 1 || letter.t > params.c)
    throw Error("crossing type " + std::to_string(letter.t) + " > c = " + std::to_string(params.c));
  if (letter.sign != 1 && letter.sign != -1)
    throw Error("sigma sign must be +1 or -1");
}

UVWord::UVWord(Params params, std::vector<UVLetter> letters)
    : params_(params), letters_(std::move(letters)) {
  params_.validate();
  for (const auto &l : letters_)
    check_letter(l, params_);
}

void UVWord::push_back(UVLetter letter) {
  check_letter(letter, params_);
  letters_.push_back(letter);
}

void UVWord::append(const UVWord &other) {
  if (!(other.params_ == params_))
    throw Error("cannot concatenate words with different (n, c)");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

UVWord UVWord::inverse() const {
  UVWord out(params_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

UVWord operator*(const UVWord &a, const UVWord &b) {
  UVWord out = a;
  out.append(b);
  return out;
}

namespace {

int parse_int(std::string_view s, std::size_t position, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(position, "malformed token '" + std::string(token) + "'");
  return value;
}

UVLetter parse_token(std::string_view token, std::size_t position) {
  const char head = token.front();
  const auto body = token.substr(1);
  switch (head) {
  case 'r':
  case 'R':
    return UVLetter::rho(parse_int(body, position, token));
  case 's':
  case 'S': {
    const auto dot = body.find('.');
    if (dot == std::string_view::npos)
      throw ParseError(position, "sigma token '" + std::string(token) + "' needs <i>.<t>");
    const int i = parse_int(body.substr(0, dot), position, token);
    const int t = parse_int(body.substr(dot + 1), position, token);
    return UVLetter::sigma(i, t, head == 's' ? 1 : -1);
  }
  default:
    throw ParseError(position, "unknown generator '" + std::string(token) + "'");
  }
}

} // namespace

UVWord parse_word(std::string_view text, Params params) {
  UVWord word(params);
  std::size_t position = 0;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k])))
      ++k;
    if (k == text.size())
      break;
    std::size_t end = k;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    const auto token = text.substr(k, end - k);
    const auto letter = parse_token(token, position);
    try {
      word.push_back(letter);
    } catch (const Error &e) {
      throw ParseError(position, e.what());
    }
    ++position;
    k = end;
  }
  return word;
}

std::string to_token(const UVLetter &letter) {
  if (letter.is_rho())
    return "r" + std::to_string(letter.i);
  return (letter.sign > 0 ? "s" : "S") + std::to_string(letter.i) + "." + std::to_string(letter.t);
}

std::string to_string(const UVWord &word) {
  std::string out;
  for (const auto &l : word.letters()) {
    if (!out.empty())
      out += ' ';
    out += to_token(l);
  }
  return out;
}

UVWord free_reduce(const UVWord &word) {
  std::vector<UVLetter> stack;
  stack.reserve(word.size());
  for (const auto &l : word.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return UVWord(word.params(), std::move(stack));
}

} // namespace uvbraid
