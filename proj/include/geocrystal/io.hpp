#ifndef GEOCRYSTAL_IO_HPP
#define GEOCRYSTAL_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "geocrystal/charts.hpp"
#include "geocrystal/gyt.hpp"
#include "geocrystal/matrix.hpp"
#include "geocrystal/slgroup.hpp"
#include "geocrystal/tableau.hpp"

// JSON payloads. Rational functions travel as strings in the parser's syntax;
// index pairs are keys of the form "k,j".

namespace geocrystal::io {

using json = nlohmann::json;

/// {"n": n, "entries": [[str, ...], ...]} with n + 1 rows.
json to_json(const MatRF& m);
MatRF matrix_from_json(const json& j);

/// {"n": n, "chart": "a" | "A", "coords": {"k,j": str}}.
json to_json(const charts::TorusPointA& p);
json to_json(const charts::TorusPointB& q);
using ChartPoint = std::variant<charts::TorusPointA, charts::TorusPointB>;
ChartPoint chart_from_json(const json& j);

/// {"n": n, "B": {"k,j": int}} for 1 <= k < j <= n+1.
json to_json(const gyt::SharpElement& v);
gyt::SharpElement sharp_from_json(const json& j);

/// {"shape": [...], "rows": [[...], ...]}.
json to_json(const gyt::Tableau& t);
gyt::Tableau tableau_from_json(const json& j);

/// {"identity": str, "holds": bool, "witness": str | null}.
json to_json(const sl::IdentityReport& r);

std::string index_key(int k, int j);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace geocrystal::io

#endif
