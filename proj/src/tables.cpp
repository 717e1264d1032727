#include "commtuple/tables.hpp"

#include <map>
#include <sstream>

#include "commtuple/asymptotics.hpp"
#include "commtuple/delta.hpp"
#include "commtuple/homcount.hpp"

namespace commtuple::tables {

const std::string_view kTable1 =
    "2 0 1\n2 1 1\n2 2 2\n2 3 3\n2 4 5\n2 5 7\n2 6 11\n2 7 15\n2 8 22\n2 9 30\n2 10 42\n"
    "3 0 1\n3 1 1\n3 2 4\n3 3 8\n3 4 21\n3 5 39\n3 6 92\n3 7 170\n3 8 360\n3 9 667\n"
    "3 10 1316\n"
    "4 0 1\n4 1 1\n4 2 8\n4 3 21\n4 4 84\n4 5 206\n4 6 717\n4 7 1810\n4 8 5462\n"
    "4 9 13859\n4 10 38497\n";

const std::string_view kTable2 =
    "2: 2,2 2,3 2,4 2,5 3,3 3,5\n"
    "3: 2,2 2,3 2,4 2,5 3,3 3,4 3,5\n"
    "4: 2,2 2,3 2,4 2,5 3,3 3,4 3,5 3,7\n"
    "5: 2,2 2,3 2,4 2,5 3,3 3,4 3,5 3,7\n"
    "6: 2,2 2,3 2,4 2,5 3,3 3,4 3,5 3,7\n"
    "7: 2,2 2,3 2,4 2,5 3,3 3,4 3,5 3,7\n"
    "8: 2,2 2,3 2,4 2,5 3,3 3,4 3,5\n"
    "9: 2,2 2,3 2,4 2,5 3,3 3,4 3,5\n"
    "10: 2,2 2,3 2,4 2,5 3,3 3,4 3,5\n";

const std::string_view kTable3 =
    "2|1.905692920·10^8|7.651654004·10^-30|0.000000000\n"
    "3|2.173101780·10^19|5.671467739·10^-14|0.000000000\n"
    "4|4.596301073·10^31|4.203737688·10^2|0.000000000\n"
    "5|5.233985605·10^44|3.115844322·10^18|0.000000000\n"
    "6|1.866914831·10^58|2.309488974·10^34|0.000000000\n"
    "7|1.544852719·10^72|1.711811878·10^50|0.000000000\n"
    "8|2.441267698·10^86|1.268808787·10^66|0.000000000\n"
    "9|6.417286329·10^100|9.404513196·10^81|0.000000000\n"
    "10|2.532012849·10^115|6.970701127·10^97|0.000000000\n"
    "20|1.753717670·10^266|3.488814560·10^256|0.000000000\n"
    "30|3.930913320·10^420|1.746140999·10^415|0.000004442\n"
    "40|4.019856937·10^576|8.739382209·10^573|0.002174053\n"
    "50|6.226773355·10^733|4.374034023·10^732|0.070245595\n"
    "60|5.888107470·10^891|2.189190629·10^891|0.371798687\n"
    "70|1.523836227·10^1050|1.095683203·10^1050|0.719029502\n"
    "80|6.087303965·10^1208|5.483860866·10^1208|0.900868578\n"
    "90|2.835124887·10^1367|2.744655564·10^1367|0.968089828\n"
    "100|1.387516910·10^1526|1.373691701·10^1526|0.990036007\n";

// '*' marks profiles whose final run is not preceded by a single run of the
// opposite sign (a zero, or more than one change).
const std::string_view kTable4 =
    "2 2 -2\n2 3 -2\n2 4 -2\n2 5 -2\n2 6 +3*\n2 7 -19*\n2 8 -23\n2 9 +2\n2 10 -26\n"
    "3 3 +18\n3 4 -3*\n3 5 +15\n3 6 +2\n3 7 +8*\n3 8 +2\n3 9 +2\n3 10 +2\n"
    "4 4 -16\n4 5 -19\n4 6 +2\n4 7 -26\n4 8 -29\n4 9 +2\n4 10 -33\n"
    "5 5 +2\n5 6 +2\n5 7 -38\n5 8 +2\n5 9 +2\n5 10 -47\n"
    "6 6 +2\n6 7 +2\n6 8 +2\n6 9 +2\n6 10 +2\n"
    "7 7 -41\n7 8 -47\n7 9 +2\n7 10 -49\n"
    "8 8 +2\n8 9 +2\n8 10 -59\n"
    "9 9 +2\n9 10 +2\n"
    "10 10 -59\n";

namespace {

void compare(VerifyResult& result, const std::string& cell, const std::string& expected,
             const std::string& actual) {
  ++result.cells;
  if (expected != actual) result.diffs.push_back({cell, expected, actual});
}

std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string pairs_text(const std::vector<Pair>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "," + std::to_string(b);
  }
  return out;
}

}  // namespace

VerifyResult verify_table1() {
  VerifyResult result{"table1", 0, {}, "N_ell(n), ell in {2,3,4}, 0 <= n <= 10"};
  std::map<int, CountTable> by_ell;
  for (const auto& line : lines(kTable1)) {
    std::istringstream in(line);
    int ell = 0;
    int n = 0;
    std::string expected;
    in >> ell >> n >> expected;
    auto it = by_ell.try_emplace(ell, ell, 10).first;
    compare(result, "N_" + std::to_string(ell) + "(" + std::to_string(n) + ")", expected,
            to_string(it->second[n]));
  }
  return result;
}

VerifyResult verify_table2(int a_max, int workers) {
  VerifyResult result{"table2", 0, {}, "strict exceptions, 2 <= a <= b <= " + std::to_string(a_max)};
  const auto reports = scan_exceptions(2, 10, a_max, workers);
  for (const auto& line : lines(kTable2)) {
    const auto colon = line.find(':');
    const int ell = std::stoi(line.substr(0, colon));
    std::string expected = line.substr(colon + 2);
    if (a_max < 7) {
      // A narrow window only sees the pairs that fit inside it.
      std::vector<Pair> kept;
      std::istringstream in(expected);
      for (std::string tok; in >> tok;) {
        const auto comma = tok.find(',');
        const int a = std::stoi(tok.substr(0, comma));
        const int b = std::stoi(tok.substr(comma + 1));
        if (b <= a_max) kept.emplace_back(a, b);
      }
      expected = pairs_text(kept);
    }
    const auto& report = reports.at(static_cast<std::size_t>(ell - 2));
    compare(result, "F_" + std::to_string(ell) + "^+", expected, pairs_text(report.negative_pairs));
  }
  return result;
}

VerifyResult verify_table3(int workers) {
  VerifyResult result{"table3", 0, {}, "N_ell(100) against B_ell(100)"};
  std::vector<int> ells;
  std::vector<std::string> expected_lines = lines(kTable3);
  for (const auto& line : expected_lines) ells.push_back(std::stoi(line.substr(0, line.find('|'))));
  const auto rows = ratio_table(100, ells, workers);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::istringstream in(expected_lines[i]);
    std::string ell_text;
    std::string n_text;
    std::string b_text;
    std::string ratio_text;
    std::getline(in, ell_text, '|');
    std::getline(in, n_text, '|');
    std::getline(in, b_text, '|');
    std::getline(in, ratio_text, '|');
    const std::string where = "ell=" + ell_text;
    compare(result, "N " + where, n_text, rows[i].n_text());
    compare(result, "B " + where, b_text, rows[i].b_text());
    compare(result, "B/N " + where, ratio_text, rows[i].ratio_text());
  }
  return result;
}

VerifyResult verify_table4(int workers) {
  VerifyResult result{"table4", 0, {}, "sign stabilization, 2 <= a <= b <= 10"};
  const auto profiles = sign_profiles(10, workers);
  std::map<Pair, const SignProfile*> by_pair;
  for (const auto& p : profiles) by_pair[{p.a, p.b}] = &p;
  int starred = 0;
  for (const auto& line : lines(kTable4)) {
    std::istringstream in(line);
    int a = 0;
    int b = 0;
    std::string expected;
    in >> a >> b >> expected;
    if (expected.back() == '*') ++starred;
    compare(result, "(" + std::to_string(a) + "," + std::to_string(b) + ")", expected,
            by_pair.at({a, b})->label());
  }
  result.note += ", " + std::to_string(starred) + " starred";
  return result;
}

}  // namespace commtuple::tables
