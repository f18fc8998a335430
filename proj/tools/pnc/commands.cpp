#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pnc/codes.hpp"
#include "pnc/error.hpp"
#include "pnc/ideal.hpp"
#include "pnc/invariants.hpp"
#include "pnc/oracle.hpp"

namespace pnc::cli {

namespace {

using json = nlohmann::ordered_json;

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        T value{};
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            fail(Errc::ParseError, std::string("bad ") + what + " entry '" + item + "' in '" + text + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

std::uint32_t smallest_prime_factor(std::uint64_t n) {
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return static_cast<std::uint32_t>(f);
    return static_cast<std::uint32_t>(n);
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
    std::ostringstream s;
    for (std::size_t k = 0; k < v.size(); ++k) s << (k ? sep : "") << v[k];
    return s.str();
}

struct OracleSummary {
    std::uint64_t points = 0;
    bool v_point = true;
    bool hilbert = true;
    bool reg_delta = true;
    bool ok() const { return v_point && hilbert && reg_delta; }
};

OracleSummary oracle_summary(const Variety& x, unsigned threads) {
    const auto& seq = x.sequence();
    OracleSummary s;
    const auto pts = x.enumerate_points(kOracleCap);
    const auto v = v_point_oracle_all(x, kOracleCap, threads);
    s.points = pts.size();
    std::uint64_t v_min = v.front();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        s.v_point = s.v_point && v[k] == v_point(x, pts[k]);
        v_min = std::min(v_min, v[k]);
    }
    s.reg_delta = v_min == reg_delta(seq);
    for (std::uint64_t d = 0; d <= reg_hilbert(seq) + 2; ++d)
        s.hilbert = s.hilbert && hilbert_oracle(x, d) == hilbert_function(seq, d);
    return s;
}

}  // namespace

Variety load_variety(const SequenceArgs& args) {
    const auto sizes = parse_list<std::uint64_t>(args.sizes, "--d");
    std::uint32_t p = 0;
    if (args.p) {
        p = *args.p;
    } else {
        if (sizes.empty() || sizes.front() < 2) fail(Errc::SizeOne, "d_0 must be at least 2");
        p = smallest_prime_factor(sizes.front());
    }
    auto seq = validate_sequence(p, sizes, args.q);
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!args.modulus.empty()) modulus = parse_list<std::uint32_t>(args.modulus, "--modulus");
    return Variety(std::move(seq), std::move(modulus));
}

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        switch (err->code()) {
            case Errc::TooManyPoints:
            case Errc::SearchTooLarge:
            case Errc::DimensionTooLarge:
                return kResourceCap;
            default:
                return kInvalidInput;
        }
    }
    return kInvalidInput;
}

int run_invariants(const SequenceArgs& args, bool with_oracle, unsigned threads, std::ostream& out) {
    const auto x = load_variety(args);
    const auto r = invariant_report(x.sequence());
    std::optional<OracleSummary> oracle;
    if (with_oracle) oracle = oracle_summary(x, threads);

    if (args.format == "json") {
        json doc;
        doc["sequence"] = r.sequence.sizes;
        doc["q"] = r.sequence.q;
        doc["cardinality"] = r.cardinality;
        doc["reg_hilbert"] = r.reg_hilbert;
        doc["reg_delta"] = r.reg_delta;
        doc["m_values"] = r.m_values;
        doc["v_units"] = r.v_units;
        doc["cayley_bacharach"] = r.cayley_bacharach;
        if (oracle) {
            doc["oracle_agreement"] = {{"points", oracle->points},
                                       {"v_point", oracle->v_point},
                                       {"hilbert", oracle->hilbert},
                                       {"reg_delta", oracle->reg_delta}};
        }
        out << doc.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "sequence";
        for (std::size_t j = 0; j < r.v_units.size(); ++j) out << ",v_e" << j;
        out << ",cardinality,reg_hilbert,reg_delta\n";
        out << '"' << r.sequence.to_string() << '"';
        for (auto v : r.v_units) out << ',' << v;
        out << ',' << r.cardinality << ',' << r.reg_hilbert << ',' << r.reg_delta << '\n';
    } else {
        auto row = [&](const char* key, const std::string& value) {
            out << std::left << std::setw(18) << key << value << '\n';
        };
        row("sequence", r.sequence.to_string());
        row("q", std::to_string(r.sequence.q));
        row("|X|", std::to_string(r.cardinality));
        row("reg H", std::to_string(r.reg_hilbert));
        row("reg delta", std::to_string(r.reg_delta));
        row("m_1..m_n", join(r.m_values));
        row("v_e0..v_en", join(r.v_units));
        row("Cayley-Bacharach", r.cayley_bacharach ? "yes" : "no");
        if (oracle) {
            row("oracle points", std::to_string(oracle->points));
            row("oracle v_P", oracle->v_point ? "agree" : "MISMATCH");
            row("oracle H_X", oracle->hilbert ? "agree" : "MISMATCH");
            row("oracle reg delta", oracle->reg_delta ? "agree" : "MISMATCH");
        }
    }
    return oracle && !oracle->ok() ? kMismatch : kOk;
}

int run_indicator(const SequenceArgs& args, const std::string& point_text, bool standard, std::ostream& out) {
    const auto x = load_variety(args);
    const auto pt = x.parse_point(point_text);
    const auto v = v_point(x, pt);
    const auto raw = indicator_raw(x, pt);
    std::optional<IndicatorResult> res;
    if (standard) res = standard_indicator(x, pt);

    std::optional<bool> verified;
    if (x.cardinality() <= kOracleCap) {
        bool ok = verify_indicator(x, raw, pt);
        if (res) ok = ok && verify_indicator(x, res->standard, pt);
        verified = ok;
    }

    if (args.format == "json") {
        json doc;
        doc["sequence"] = x.sequence().sizes;
        doc["point"] = x.to_string(pt);
        doc["pivot"] = pt.pivot;
        doc["v"] = v;
        doc["raw"] = raw.to_string();
        doc["raw_degree"] = raw.degree();
        if (res) {
            doc["standard"] = res->standard.to_string();
            doc["standard_degree"] = res->standard.degree();
        }
        doc["verified"] = verified ? json(*verified) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "point,v,form,degree,polynomial\n";
        out << '"' << x.to_string(pt) << "\"," << v << ",raw," << raw.degree() << ",\"" << raw.to_string() << "\"\n";
        if (res)
            out << '"' << x.to_string(pt) << "\"," << v << ",standard," << res->standard.degree() << ",\""
                << res->standard.to_string() << "\"\n";
    } else {
        out << "point     " << x.to_string(pt) << '\n';
        out << "v_P       " << v << '\n';
        out << "raw       " << raw.to_string() << "  (degree " << raw.degree() << ")\n";
        if (res) out << "standard  " << res->standard.to_string() << "  (degree " << res->standard.degree() << ")\n";
        out << "verified  " << (verified ? (*verified ? "yes" : "NO") : "skipped (|X| too large)") << '\n';
    }
    return verified && !*verified ? kMismatch : kOk;
}

int run_min_distance(const SequenceArgs& args, const MinDistanceArgs& md, std::ostream& out, std::ostream& err) {
    const auto x = load_variety(args);
    const auto& seq = x.sequence();
    const auto rd = reg_delta(seq);
    try {
        const auto code = build_code(x, md.degree);
        SearchOptions opts;
        opts.threads = std::max(1u, md.threads);
        if (md.cap != 0) opts.cap = md.cap;
        const auto start = std::chrono::steady_clock::now();
        const auto result = min_distance(code, opts);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        if (args.format == "json") {
            json doc;
            doc["sequence"] = seq.sizes;
            doc["degree"] = md.degree;
            doc["dimension"] = code.dimension();
            doc["length"] = code.length();
            doc["min_distance"] = result.distance;
            doc["classes"] = result.classes;
            out << doc.dump(2) << '\n';
        } else if (args.format == "csv") {
            out << "degree,dimension,length,min_distance,classes\n";
            out << md.degree << ',' << code.dimension() << ',' << code.length() << ',' << result.distance << ','
                << result.classes << '\n';
        } else {
            out << "delta(" << md.degree << ") = " << result.distance << '\n';
            out << "code     [" << code.length() << ", " << code.dimension() << "] over F_" << seq.q << '\n';
            out << "classes  " << result.classes << '\n';
            out << "time     " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
        }
        return kOk;
    } catch (const Error& e) {
        if (e.code() != Errc::SearchTooLarge && e.code() != Errc::DimensionTooLarge) throw;
        err << "pnc: " << e.what() << '\n';
        if (md.degree >= rd)
            err << "pnc: without searching: d = " << md.degree << " >= reg delta = " << rd << ", so delta(d) = 1\n";
        else
            err << "pnc: without searching: d = " << md.degree << " < reg delta = " << rd << ", so delta(d) > 1\n";
        return kResourceCap;
    }
}

int run_generator(const SequenceArgs& args, std::uint64_t degree, std::ostream& out) {
    const auto x = load_variety(args);
    write_generator_matrix(out, build_code(x, degree));
    return kOk;
}

int run_oracle(const SequenceArgs& args, const OracleArgs& oracle, std::ostream& out) {
    const auto x = load_variety(args);
    const auto& seq = x.sequence();
    if (x.cardinality() > kOracleCap)
        fail(Errc::TooManyPoints, "oracle needs |X| <= " + std::to_string(kOracleCap) + ", got " +
                                      std::to_string(x.cardinality()));
    std::vector<std::string> checks = oracle.checks;
    if (oracle.all_points && checks.empty()) checks = {"v-point"};
    if (checks.empty()) checks = {"v-point", "hilbert", "reg-delta", "uniqueness", "zero-function"};

    struct Outcome {
        std::string name;
        std::uint64_t agree = 0;
        std::uint64_t total = 0;
    };
    std::vector<Outcome> outcomes;
    const auto pts = x.enumerate_points(kOracleCap);
    for (const auto& check : checks) {
        Outcome o{check};
        if (check == "v-point") {
            const auto v = v_point_oracle_all(x, kOracleCap, oracle.threads);
            for (std::size_t k = 0; k < pts.size(); ++k) o.agree += v[k] == v_point(x, pts[k]);
            o.total = pts.size();
        } else if (check == "hilbert") {
            const auto top = oracle.max_degree.value_or(reg_hilbert(seq) + 2);
            for (std::uint64_t d = 0; d <= top; ++d) o.agree += hilbert_oracle(x, d) == hilbert_function(seq, d);
            o.total = top + 1;
        } else if (check == "reg-delta") {
            o.agree = reg_delta_oracle(x, kOracleCap, oracle.threads) == reg_delta(seq);
            o.total = 1;
        } else if (check == "uniqueness") {
            for (const auto& pt : pts) o.agree += uniqueness_check(x, pt);
            o.total = pts.size();
        } else if (check == "zero-function") {
            for (const auto& pt : pts) o.agree += zero_function_check(x, pt);
            o.total = pts.size();
        } else {
            fail(Errc::InvalidArgument, "unknown check '" + check + "'");
        }
        outcomes.push_back(o);
    }

    bool ok = true;
    for (const auto& o : outcomes) ok = ok && o.agree == o.total;
    if (args.format == "json") {
        json doc;
        doc["sequence"] = seq.sizes;
        doc["points"] = pts.size();
        json arr = json::array();
        for (const auto& o : outcomes) arr.push_back({{"check", o.name}, {"agree", o.agree}, {"total", o.total}});
        doc["checks"] = arr;
        doc["oracle_agreement"] = ok;
        out << doc.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "check,agree,total\n";
        for (const auto& o : outcomes) out << o.name << ',' << o.agree << ',' << o.total << '\n';
    } else {
        out << "sequence " << seq.to_string() << ", |X| = " << pts.size() << '\n';
        for (const auto& o : outcomes) {
            const char* verb = o.name == "uniqueness" ? "unique" : o.name == "zero-function" ? "hold" : "agree";
            out << std::left << std::setw(15) << o.name << o.agree << '/' << o.total << ' ' << verb
                << (o.agree == o.total ? "" : "  MISMATCH") << '\n';
        }
    }
    return ok ? kOk : kMismatch;
}

}  // namespace pnc::cli
