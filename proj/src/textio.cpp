#include "cellkit/textio.hpp"

#include <algorithm>
#include <sstream>

namespace cellkit {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    check(!item.empty(), Err::OutOfRange, "empty entry in '" + s + "'");
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      check(used == item.size(), Err::OutOfRange, "bad integer '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      fail(Err::OutOfRange, "bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

Permutation parse_perm(const std::string& text, int n_hint) {
  check(!text.empty(), Err::OutOfRange, "empty permutation");
  if (text.rfind("w:", 0) == 0) {
    std::vector<int> letters = parse_int_list(text.substr(2));
    int n = n_hint;
    if (n < 0) {
      n = 1;
      for (int a : letters) n = std::max(n, a + 1);
    }
    return Permutation::from_word(letters, n);
  }
  std::vector<int> seq;
  if (text.find(',') != std::string::npos) {
    seq = parse_int_list(text);
  } else {
    for (char c : text) {
      check(c >= '1' && c <= '9', Err::OutOfRange, "bad digit in '" + text + "'");
      seq.push_back(c - '0');
    }
  }
  Permutation p = Permutation::from_one_line(seq);
  check(n_hint < 0 || p.rank() == n_hint, Err::RankMismatch,
        "permutation '" + text + "' does not live in S_" + std::to_string(n_hint));
  return p;
}

std::string laurent_str(const Laurent& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.hi(); e >= p.lo(); --e) {
    long long c = p.coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

nlohmann::json laurent_json(const Laurent& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int e = p.lo(); e <= p.hi(); ++e)
    if (p.coeff(e) != 0) j.push_back({e, p.coeff(e)});
  return j;
}

Laurent laurent_from_json(const nlohmann::json& j) {
  Laurent p;
  check(j.is_array(), Err::IoError, "polynomial must be an array of [exp, coeff]");
  for (const auto& t : j) {
    check(t.is_array() && t.size() == 2 && t[0].is_number_integer() && t[1].is_number_integer(),
          Err::IoError, "bad polynomial term");
    p.add_scaled(Laurent::monomial(t[0].get<int>(), t[1].get<long long>()));
  }
  return p;
}

std::string tableau_ascii(const StandardTableau& t) {
  int w = 1;
  for (const auto& row : t.rows)
    for (int v : row) w = std::max(w, static_cast<int>(std::to_string(v).size()));
  std::ostringstream os;
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      std::string s = std::to_string(row[c]);
      if (c) os << ' ';
      os << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json tableau_json(const StandardTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return nlohmann::json{{"rows", rows}};
}

StandardTableau tableau_from_json(const nlohmann::json& j) {
  check(j.is_object() && j.contains("rows") && j["rows"].is_array(), Err::IoError,
        "tableau JSON must be {\"rows\": [[...], ...]}");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j["rows"]) {
    check(r.is_array(), Err::IoError, "tableau rows must be arrays");
    rows.push_back(r.get<std::vector<int>>());
  }
  StandardTableau t(rows);
  check(t.valid(), Err::ShapeMismatch, "not a standard tableau");
  return t;
}

nlohmann::json tl_json(const TLDiagram& d) {
  auto arcs = [](const std::vector<std::pair<int, int>>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [a, b] : v) j.push_back({a, b});
    return j;
  };
  return nlohmann::json{
      {"n", d.n}, {"cups", arcs(d.cups())}, {"caps", arcs(d.caps())}, {"through", d.through()}};
}

}  // namespace cellkit
