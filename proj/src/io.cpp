#include "qlens/io.hpp"

#include <iomanip>
#include <sstream>

#include "qlens/error.hpp"

namespace qlens {

Weights parse_weights(const std::string& text) {
    Weights out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidWeights, "cannot parse weight '" + item + "'");
        }
        if (used != item.size()) throw Error(Errc::InvalidWeights, "cannot parse weight '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string weights_string(const Weights& w, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? std::string(1, sep) : "") << w[i];
    return os.str();
}

json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<std::int64_t>());
}

json matrix_json(const WeightSystem& ws, const IntMatrix& entries, const std::vector<EntryTag>& tags) {
    json j;
    j["r"] = ws.r;
    j["weights"] = ws.input;
    j["size"] = entries.rows();
    j["order"] = "level-major";
    json rows = json::array(), trows = json::array();
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        json row = json::array(), trow = json::array();
        for (Eigen::Index k = 0; k < entries.cols(); ++k) {
            row.push_back(integer_json(entries(i, k)));
            trow.push_back(tags[i * entries.cols() + k] == EntryTag::ModR ? "MOD_R" : "EXACT");
        }
        rows.push_back(row);
        trows.push_back(trow);
    }
    j["entries"] = rows;
    j["tags"] = trows;
    return j;
}

json matrix_json(const WeightSystem& ws, const FormulaMatrix& f) {
    return matrix_json(ws, f.entries, f.tags);
}

IntMatrix matrix_from_json(const json& j) {
    const auto& rows = j.at("entries");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != n) throw Error(Errc::SizeMismatch, "matrix is not square");
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = integer_from_json(rows[i][k]);
    }
    return m;
}

std::string matrix_plain(const IntMatrix& m, const std::vector<EntryTag>* tags) {
    std::size_t width = 1;
    for (Eigen::Index i = 0; i < m.size(); ++i) width = std::max(width, m.data()[i].str().size());
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            os << (k ? " " : "") << std::setw(static_cast<int>(width)) << m(i, k).str();
            if (tags) os << ((*tags)[i * m.cols() + k] == EntryTag::ModR ? "*" : " ");
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_csv(const IntMatrix& m) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? "," : "") << m(i, k).str();
        os << '\n';
    }
    return os.str();
}

json invariant_json(const InvariantTerms& t) {
    json j;
    j["dim"] = 2 * t.dim_index + 1;
    j["position"] = t.position;
    j["r"] = t.r;
    j["n"] = t.n;
    if (t.dim_index == 3) {
        j["ratio_lhs"] = t.ratio_lhs;
        j["ratio_rhs"] = t.ratio_rhs;
        j["coprime_term"] = t.coprime_term;
    }
    json cs = json::array();
    for (const auto& c : t.congruences) cs.push_back({{"level", c.level}, {"holds", c.holds}});
    j["congruences"] = cs;
    j["isomorphic"] = t.isomorphic;
    return j;
}

std::string classes_csv(const ClassReport& rep, bool list_members) {
    std::ostringstream os;
    os << "r,n,dim,position,class_index,representative,members\n";
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        const auto& cl = rep.classes[c];
        os << rep.r << ',' << rep.n << ',' << rep.dim << ',' << rep.position << ',' << c << ",\""
           << weights_string(cl.representative) << "\",";
        if (list_members) {
            os << '"';
            for (std::size_t k = 0; k < cl.members.size(); ++k)
                os << (k ? ";" : "") << weights_string(cl.members[k]);
            os << '"';
        } else {
            os << cl.members.size();
        }
        os << '\n';
    }
    return os.str();
}

json classes_json(const ClassReport& rep, bool list_members) {
    json j;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["dim"] = rep.dim;
    j["position"] = rep.position;
    j["predicted_count"] = rep.predicted_count;
    json cs = json::array();
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        json e;
        e["class_index"] = c;
        e["representative"] = rep.classes[c].representative;
        e["members"] = rep.classes[c].members.size();
        if (list_members) e["member_list"] = rep.classes[c].members;
        cs.push_back(e);
    }
    j["classes"] = cs;
    return j;
}

json suite_json(const SuiteResult& s) {
    json j;
    j["suite"] = s.name;
    j["description"] = s.description;
    j["pass"] = s.pass;
    j["checks"] = s.checks;
    j["failures"] = s.failures;
    j["cases"] = s.cases;
    j["notes"] = s.notes;
    j["seconds"] = s.seconds;
    return j;
}

} // namespace qlens
