#include "derange/cycles.hpp"

#include <algorithm>
#include <cctype>

namespace derange {
namespace {

// Elements larger than this are rejected at parse time; coverage of {1..n}
// makes huge elements nonsensical anyway.
constexpr long kMaxElement = 1000000;

class CycleParser {
 public:
  explicit CycleParser(const std::string& text) : text_(text) {}

  CycleForm parse() {
    skip_ws();
    if (at_end()) fail(Errc::empty_input, "no cycles in input");
    CycleForm form;
    while (!at_end()) {
      form.cycles.push_back(parse_cycle(form));
      skip_ws();
    }
    return form;
  }

 private:
  std::vector<int> parse_cycle(CycleForm& form) {
    expect('(');
    std::vector<int> cycle;
    cycle.push_back(parse_elem(form));
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      cycle.push_back(parse_elem(form));
      skip_ws();
    }
    expect(')');
    return cycle;
  }

  int parse_elem(CycleForm& form) {
    skip_ws();
    bool marked = false;
    if (!at_end() && peek() == '_') {
      marked = true;
      ++pos_;
      skip_ws();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      malformed("expected an element");
    }
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxElement) {
        pos_ = start;
        malformed("element too large");
      }
      ++pos_;
    }
    if (value < 1) {
      pos_ = start;
      malformed("elements are positive");
    }
    if (marked) {
      if (form.mark) fail(Errc::multiple_marks, "more than one '_' mark");
      form.mark = static_cast<int>(value);
    }
    return static_cast<int>(value);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) malformed(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void malformed(const std::string& why) {
    fail(Errc::malformed_token,
         why + " at position " + std::to_string(pos_ + 1));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Coverage check shared by parse_cycles and to_permutation: the cycles must
// partition {1..max element} exactly.
void check_coverage(const CycleForm& form) {
  int max_elem = 0;
  for (const auto& cycle : form.cycles) {
    for (int e : cycle) max_elem = std::max(max_elem, e);
  }
  std::vector<char> seen(static_cast<std::size_t>(max_elem), 0);
  for (const auto& cycle : form.cycles) {
    for (int e : cycle) {
      if (seen[static_cast<std::size_t>(e - 1)]) {
        fail(Errc::duplicate_element, "element " + std::to_string(e) + " appears twice");
      }
      seen[static_cast<std::size_t>(e - 1)] = 1;
    }
  }
  for (int e = 1; e <= max_elem; ++e) {
    if (!seen[static_cast<std::size_t>(e - 1)]) {
      fail(Errc::missing_element, "element " + std::to_string(e) + " is not covered");
    }
  }
}

}  // namespace

int CycleForm::n() const {
  std::size_t total = 0;
  for (const auto& cycle : cycles) total += cycle.size();
  return static_cast<int>(total);
}

CycleForm parse_cycles(const std::string& text) {
  CycleForm form = CycleParser(text).parse();
  check_coverage(form);
  return form;
}

Permutation to_permutation(const CycleForm& c) {
  check_coverage(c);
  const int n = c.n();
  if (c.mark && (*c.mark < 1 || *c.mark > n)) {
    fail(Errc::mark_out_of_range, "mark " + std::to_string(*c.mark) + " outside [1.." +
                                      std::to_string(n) + "]");
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (const auto& cycle : c.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      img[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(img));
}

CycleForm to_cycles(const Permutation& p, std::optional<int> mark) {
  const int n = p.size();
  if (mark && (*mark < 1 || *mark > n)) {
    fail(Errc::mark_out_of_range, "mark " + std::to_string(*mark) + " outside [1.." +
                                      std::to_string(n) + "]");
  }
  CycleForm form;
  form.mark = mark;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  // Walking starts in ascending order, so each cycle begins at its minimum
  // and cycles come out sorted by minimum.
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[static_cast<std::size_t>(x - 1)]; x = p(x)) {
      visited[static_cast<std::size_t>(x - 1)] = 1;
      cycle.push_back(x);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

std::string format_cycles(const CycleForm& c) {
  std::string out;
  for (const auto& cycle : c.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ',';
      if (c.mark && *c.mark == cycle[i]) out += '_';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_canonical_cycles(const Permutation& p, std::optional<int> mark) {
  return format_cycles(to_cycles(p, mark));
}

}  // namespace derange
