// Copyright 2026 The twograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twograph/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "twograph/version.hpp"

namespace twograph {

using nlohmann::json;

namespace {

constexpr const char *kTextHeader = "twograph-state";
constexpr const char *kJsonFormat = "twograph-state";
constexpr int kFormatVersion = 1;

int to_int(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

/// Rejects out-of-range vertices, duplicate edges and members.
void check_document(const StateDocument &doc) {
    if (doc.n < 0 || doc.n > kMaxVertices) {
        throw ParseError("n=" + std::to_string(doc.n) + " outside [0, 64]");
    }
    auto in_range = [&](int v, const char *what) {
        if (v < 0 || v >= doc.n) {
            throw ParseError(std::string(what) + " vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(doc.n));
        }
    };
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : doc.edges) {
        in_range(i, "edge");
        in_range(j, "edge");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
            throw ParseError("duplicate edge " + std::to_string(i) + "-" + std::to_string(j));
        }
    }
    for (const auto *list : {&doc.r, &doc.q}) {
        std::set<int> members;
        for (int v : *list) {
            in_range(v, list == &doc.r ? "r" : "q");
            if (!members.insert(v).second) {
                throw ParseError("vertex " + std::to_string(v) + " listed twice in " + (list == &doc.r ? "r" : "q"));
            }
        }
    }
}

StateDocument normalised(StateDocument doc) {
    for (auto &[i, j] : doc.edges) {
        if (i > j) {
            std::swap(i, j);
        }
    }
    return doc;
}

}  // namespace

GeneralisedTwoGraphState StateDocument::to_state() const {
    check_document(*this);
    Gf2Graph g = Gf2Graph::from_edges(n, edges);
    VertexSet rs;
    VertexSet qs;
    for (int v : r) {
        rs.insert(v);
    }
    for (int v : q) {
        qs.insert(v);
    }
    try {
        return {std::move(g), rs, qs};
    } catch (const InvariantError &e) {
        throw ParseError(std::string("invalid state: ") + e.what());
    }
}

StateDocument StateDocument::from_state(const GeneralisedTwoGraphState &s) {
    StateDocument doc;
    doc.n = s.size();
    doc.edges = s.graph().edges();
    doc.r = s.r().to_vector();
    doc.q = s.q().to_vector();
    return doc;
}

StateDocument parse_state_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    StateDocument doc;
    bool header = false;
    bool have_n = false;
    std::set<std::string> keys;
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tokens = split_ws(raw);
        if (tokens.empty()) {
            continue;
        }
        if (!header) {
            if (tokens.size() != 2 || tokens[0] != kTextHeader) {
                throw ParseError("line " + std::to_string(lineno) + ": expected header '" + kTextHeader + " 1'");
            }
            if (to_int(tokens[1], lineno) != kFormatVersion) {
                throw ParseError("unsupported state format version " + tokens[1]);
            }
            header = true;
            continue;
        }
        const std::string &key = tokens[0];
        if (!keys.insert(key).second) {
            throw ParseError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
        }
        if (key == "n") {
            if (tokens.size() != 2) {
                throw ParseError("line " + std::to_string(lineno) + ": 'n' takes one value");
            }
            doc.n = to_int(tokens[1], lineno);
            have_n = true;
        } else if (key == "edges") {
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                const auto dash = tokens[k].find('-');
                if (dash == std::string::npos) {
                    throw ParseError("line " + std::to_string(lineno) + ": edge '" + tokens[k] + "' is not i-j");
                }
                const std::string_view tok = tokens[k];
                doc.edges.emplace_back(to_int(tok.substr(0, dash), lineno), to_int(tok.substr(dash + 1), lineno));
            }
        } else if (key == "r" || key == "q") {
            auto &list = key == "r" ? doc.r : doc.q;
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                list.push_back(to_int(tokens[k], lineno));
            }
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!header) {
        throw ParseError("empty state document");
    }
    if (!have_n) {
        throw ParseError("state document lacks 'n'");
    }
    doc = normalised(std::move(doc));
    (void)doc.to_state();
    return doc;
}

std::string to_text(const StateDocument &doc) {
    std::ostringstream out;
    out << kTextHeader << ' ' << kFormatVersion << '\n' << "n " << doc.n << '\n' << "edges";
    for (auto [i, j] : doc.edges) {
        out << ' ' << i << '-' << j;
    }
    out << "\nr";
    for (int v : doc.r) {
        out << ' ' << v;
    }
    out << "\nq";
    for (int v : doc.q) {
        out << ' ' << v;
    }
    out << '\n';
    return out.str();
}

StateDocument parse_state_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    StateDocument doc;
    try {
        if (j.at("format").get<std::string>() != kJsonFormat) {
            throw ParseError("unexpected format tag '" + j.at("format").get<std::string>() + "'");
        }
        if (j.at("version").get<int>() != kFormatVersion) {
            throw ParseError("unsupported state format version " + j.at("version").dump());
        }
        doc.n = j.at("n").get<int>();
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("edge " + e.dump() + " is not a pair");
            }
            doc.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        doc.r = j.at("r").get<std::vector<int>>();
        doc.q = j.value("q", std::vector<int>{});
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad state document: ") + e.what());
    }
    doc = normalised(std::move(doc));
    (void)doc.to_state();
    return doc;
}

std::string to_json(const StateDocument &doc) {
    json j;
    j["format"] = kJsonFormat;
    j["version"] = kFormatVersion;
    j["n"] = doc.n;
    j["edges"] = json::array();
    for (auto [a, b] : doc.edges) {
        j["edges"].push_back({a, b});
    }
    j["r"] = doc.r;
    j["q"] = doc.q;
    return j.dump(2) + "\n";
}

StateDocument parse_state_document(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        return c == '{' ? parse_state_json(text) : parse_state_text(text);
    }
    throw ParseError("empty state document");
}

StateDocument load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_document(buf.str());
}

std::string format_j(double j) {
    if (std::isinf(j)) {
        return "inf";
    }
    std::ostringstream out;
    out << j;
    return out.str();
}

double parse_j(std::string_view text) {
    if (text == "inf" || text == "infinity") {
        return kInfinity;
    }
    std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception &) {
        throw ParseError("bad j value '" + s + "'");
    }
    if (used != s.size() || !(value > 0.0) || !std::isfinite(value)) {
        throw ParseError("j must be a positive real or 'inf', got '" + s + "'");
    }
    return value;
}

std::vector<double> parse_j_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_j(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

namespace {

json meta_json(const ReportMeta &meta) {
    json j;
    j["tool"] = "twograph";
    j["version"] = kVersion;
    j["workers"] = meta.workers;
    j["seed"] = meta.seed ? json(*meta.seed) : json(nullptr);
    if (!meta.prng.empty()) {
        j["prng"] = meta.prng;
    }
    return j;
}

json census_json(const LCensus &census) {
    json j = json::object();
    for (const auto &[l, count] : census) {
        j[std::to_string(l)] = count;
    }
    return j;
}

json norms_json(const std::map<double, double> &norms) {
    json j = json::object();
    for (const auto &[jv, value] : norms) {
        j[format_j(jv)] = value;
    }
    return j;
}

json state_json(const GeneralisedTwoGraphState &s) { return json::parse(to_json(StateDocument::from_state(s))); }

std::string csv_meta_line(const ReportMeta &meta) {
    std::string line = "# twograph " + std::string(kVersion) + " workers=" + std::to_string(meta.workers);
    line += " seed=" + (meta.seed ? std::to_string(*meta.seed) : std::string("none"));
    if (!meta.prng.empty()) {
        line += " prng=" + meta.prng;
    }
    return line + "\n";
}

std::string fixed6(double x) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << x;
    return out.str();
}

}  // namespace

std::string apply_report_json(const GeneralisedTwoGraphState &s, const std::vector<Operation> &ops) {
    const AlgebraicPolarForm apf = to_apf(s);
    json j;
    j["meta"] = meta_json({});
    j["operations"] = json::array();
    for (const auto &op : ops) {
        j["operations"].push_back(op.to_string());
    }
    j["state"] = state_json(s);
    j["magnitude"] = apf.magnitude_string();
    j["phase"] = apf.phase_string();
    if (auto b = apf.boolean_phase_string()) {
        j["boolean_phase"] = *b;
    }
    return j.dump(2) + "\n";
}

std::string spectral_report_json(const SpectralReport &report, const ReportMeta &meta) {
    json j;
    j["meta"] = meta_json(meta);
    j["n"] = report.n;
    j["transforms"] = report.transforms();
    j["l_census"] = census_json(report.l_census);
    j["lj_norms"] = norms_json(report.lj_norms);
    j["cmf"] = report.cmf;
    j["par_ihn"] = report.par_ihn;
    j["sup_l"] = report.sup_l;
    return j.dump(2) + "\n";
}

std::string table1_csv(const Table1 &table, const ReportMeta &meta) {
    std::string out = csv_meta_line(meta);
    out += "n,j,norm,cmf,frequency\n";
    for (const auto &row : table.rows) {
        out += std::to_string(table.n) + "," + format_j(table.j) + "," + fixed6(row.norm) + "," +
               (row.cmf ? fixed6(*row.cmf) : std::string()) + "," + std::to_string(row.frequency) + "\n";
    }
    out += std::to_string(table.n) + "," + format_j(table.j) + "," + fixed6(table.average) + ",average," +
           std::to_string(table.classes) + "\n";
    return out;
}

std::string classify_report_json(const std::vector<OrbitClass> &classes, const std::vector<Table1> &tables,
                                 const ReportMeta &meta) {
    json j;
    j["meta"] = meta_json(meta);
    j["classes"] = json::array();
    for (const auto &c : classes) {
        json row;
        row["representative"] = c.representative.to_string();
        row["edges"] = c.representative.edges();
        row["members"] = c.members;
        row["l_census"] = census_json(c.spectra.l_census);
        row["lj_norms"] = norms_json(c.spectra.lj_norms);
        row["cmf"] = c.spectra.cmf;
        row["par_ihn"] = c.spectra.par_ihn;
        j["classes"].push_back(std::move(row));
    }
    j["tables"] = json::array();
    for (const auto &t : tables) {
        json tj;
        tj["n"] = t.n;
        tj["j"] = format_j(t.j);
        tj["average"] = t.average;
        tj["classes"] = t.classes;
        tj["rows"] = json::array();
        for (const auto &r : t.rows) {
            json rj{{"norm", r.norm}, {"frequency", r.frequency}};
            if (r.cmf) {
                rj["cmf"] = *r.cmf;
            }
            tj["rows"].push_back(std::move(rj));
        }
        j["tables"].push_back(std::move(tj));
    }
    return j.dump(2) + "\n";
}

std::string density_table_json(const DensityTable &table) {
    json j;
    j["meta"] = meta_json({table.workers, table.seed, table.prng});
    j["n"] = table.n;
    j["rows"] = json::array();
    for (const auto &r : table.rows) {
        j["rows"].push_back({{"density", r.density},
                             {"samples", r.samples},
                             {"mean_par_ihn", r.mean_par_ihn},
                             {"var_par_ihn", r.var_par_ihn},
                             {"mean_lj_norms", norms_json(r.mean_lj_norms)}});
    }
    return j.dump(2) + "\n";
}

std::string density_table_csv(const DensityTable &table) {
    std::string out = csv_meta_line({table.workers, table.seed, table.prng});
    out += "n,density,samples,mean_par_ihn,var_par_ihn";
    std::vector<double> js;
    if (!table.rows.empty()) {
        for (const auto &[jv, value] : table.rows.front().mean_lj_norms) {
            js.push_back(jv);
            out += ",mean_l" + format_j(jv);
        }
    }
    out += "\n";
    for (const auto &r : table.rows) {
        std::ostringstream line;
        line.precision(10);
        line << table.n << ',' << r.density << ',' << r.samples << ',' << r.mean_par_ihn << ',' << r.var_par_ihn;
        for (double jv : js) {
            line << ',' << r.mean_lj_norms.at(jv);
        }
        out += line.str() + "\n";
    }
    return out;
}

}  // namespace twograph
