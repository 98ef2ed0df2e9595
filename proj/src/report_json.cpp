#include "sumlab/report_json.hpp"

#include <sstream>

namespace sumlab {

namespace {

ojson decimal_block(std::initializer_list<std::pair<const char*, const Rat*>> fields) {
    ojson d;
    for (const auto& [name, value] : fields) d[name] = value->to_decimal();
    d["inexact"] = true;
    return d;
}

const char* status_name(PipelineReport::Status s) {
    return s == PipelineReport::Status::Ok ? "ok" : "schedule_exhausted";
}

ojson chain_json(const ChainChecks& c) {
    ojson j;
    j["lower_cells"] = c.lower_cells;
    j["lower_measure"] = c.lower_measure;
    j["upper_cells"] = c.upper_cells;
    j["upper_measure"] = c.upper_measure;
    j["pass"] = c.pass;
    return j;
}

std::string mask_hex(std::uint64_t mask) {
    std::ostringstream os;
    os << "0x" << std::hex << mask;
    return os.str();
}

} // namespace

ojson to_json(const VerificationReport& rep) {
    ojson j;
    j["inequality"] = inequality_name(rep.id);
    j["group"] = rep.group;
    if (!rep.set_a.empty()) j["set_a"] = rep.set_a;
    if (!rep.set_b.empty()) j["set_b"] = rep.set_b;
    if (!rep.set_c.empty()) j["set_c"] = rep.set_c;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["lhs"] = rep.lhs.to_string();
    j["rhs"] = rep.rhs.to_string();
    j["pass"] = rep.pass;
    j["slack"] = rep.slack.to_string();
    if (!rep.precondition_met) j["precondition_met"] = false;
    j["decimal"] = decimal_block({{"lhs", &rep.lhs}, {"rhs", &rep.rhs}, {"slack", &rep.slack}});
    return j;
}

ojson to_json(const PetridisCertificate& cert) {
    ojson j;
    j["group"] = cert.x.group()->to_string();
    j["x_cardinality"] = cert.x.cardinality();
    if (cert.x.cardinality() <= 64) {
        j["x_elements"] = ojson::array();
        for (auto idx : cert.x.indices()) {
            auto e = cert.x.group()->element_at(idx);
            j["x_elements"].push_back(e.coords);
        }
    }
    j["ratio"] = cert.ratio.to_string();
    j["exhaustive"] = cert.exhaustive;
    j["powers"] = ojson::array();
    for (const auto& p : cert.powers) {
        ojson pj;
        pj["m"] = p.m;
        pj["card"] = p.card;
        pj["bound"] = p.bound.to_string();
        pj["ok"] = p.ok;
        j["powers"].push_back(std::move(pj));
    }
    j["all_ok"] = cert.all_ok;
    j["decimal"] = decimal_block({{"ratio", &cert.ratio}});
    return j;
}

ojson to_json(const QuotientLemmaReport& rep) {
    ojson j;
    j["inclusion_a"] = rep.inclusion_a;
    j["inclusion_b"] = rep.inclusion_b;
    j["sum_commutes"] = rep.sum_commutes;
    j["measure_a"] = rep.measure_a;
    j["measure_b"] = rep.measure_b;
    j["measure_sum"] = rep.measure_sum;
    j["pass"] = rep.pass;
    return j;
}

ojson to_json(const PipelineReport& rep) {
    ojson j;
    j["status"] = status_name(rep.status);
    j["epsilon"] = rep.epsilon.to_string();
    j["mu_a"] = rep.mu_a.to_string();
    j["mu_b"] = rep.mu_b.to_string();
    j["mu_sum"] = rep.mu_sum.to_string();
    j["alpha"] = rep.alpha.to_string();
    j["n_base"] = rep.n_base;
    j["n"] = rep.n;
    j["resolution"] = rep.resolution;
    j["mu_an"] = rep.mu_an.to_string();
    j["mu_anbn"] = rep.mu_anbn.to_string();
    j["chain_a"] = chain_json(rep.chain_a);
    j["chain_b"] = chain_json(rep.chain_b);
    j["key_lhs"] = rep.key_lhs;
    j["key_rhs"] = rep.key_rhs.to_string();
    j["key_ok"] = rep.key_ok;
    j["certificate_source"] = rep.certificate_source;
    j["certificate"] = to_json(rep.certificate);
    j["bounds"] = ojson::array();
    for (const auto& b : rep.bounds) {
        ojson bj;
        bj["m"] = b.m;
        bj["lhs"] = b.lhs.to_string();
        bj["rhs"] = b.rhs.to_string();
        bj["ok"] = b.ok;
        j["bounds"].push_back(std::move(bj));
    }
    j["pass"] = rep.pass;
    j["decimal"] = decimal_block({{"alpha", &rep.alpha},
                                  {"mu_a", &rep.mu_a},
                                  {"mu_sum", &rep.mu_sum}});
    return j;
}

ojson to_json(const ConvergenceReport& rep) {
    ojson j;
    j["exact_a"] = rep.exact_a.to_string();
    j["exact_sum"] = rep.exact_sum.to_string();
    j["rows"] = ojson::array();
    for (const auto& row : rep.rows) {
        ojson rj;
        rj["resolution"] = row.resolution;
        rj["outer_a"] = row.outer_a.to_string();
        rj["sum_estimate"] = row.sum_estimate.to_string();
        rj["decimal"] = decimal_block({{"outer_a", &row.outer_a},
                                       {"sum_estimate", &row.sum_estimate}});
        j["rows"].push_back(std::move(rj));
    }
    return j;
}

ojson search_to_json(const std::vector<SearchInstance>& ranked, const std::string& group,
                     const std::string& inequality) {
    ojson j;
    j["group"] = group;
    j["inequality"] = inequality;
    j["instances"] = ojson::array();
    for (const auto& inst : ranked) {
        ojson ij;
        ij["a_mask"] = mask_hex(inst.a_mask);
        ij["b_mask"] = mask_hex(inst.b_mask);
        ij["m"] = inst.m;
        ij["n"] = inst.n;
        ij["lhs"] = inst.lhs.to_string();
        ij["rhs"] = inst.rhs.to_string();
        ij["slack"] = inst.slack.to_string();
        ij["normalized_slack"] = inst.normalized_slack.to_string();
        j["instances"].push_back(std::move(ij));
    }
    return j;
}

std::string verification_csv(const std::vector<VerificationReport>& reps) {
    std::string out = "inequality,group,m,n,lhs,rhs,pass,slack\n";
    for (const auto& r : reps) {
        out += inequality_name(r.id) + "," + r.group + "," + std::to_string(r.m) + "," +
               std::to_string(r.n) + "," + r.lhs.to_string() + "," + r.rhs.to_string() + "," +
               (r.pass ? "true" : "false") + "," + r.slack.to_string() + "\n";
    }
    return out;
}

std::string search_csv(const std::vector<SearchInstance>& ranked, const std::string& group) {
    std::string out = "group,a_mask,b_mask,m,n,lhs,rhs,slack,normalized_slack\n";
    for (const auto& inst : ranked) {
        out += group + "," + mask_hex(inst.a_mask) + "," + mask_hex(inst.b_mask) + "," +
               std::to_string(inst.m) + "," + std::to_string(inst.n) + "," +
               inst.lhs.to_string() + "," + inst.rhs.to_string() + "," +
               inst.slack.to_string() + "," + inst.normalized_slack.to_string() + "\n";
    }
    return out;
}

std::string convergence_csv(const ConvergenceReport& rep) {
    std::string out = "resolution,outer_a,sum_estimate,exact_a,exact_sum\n";
    for (const auto& row : rep.rows) {
        out += std::to_string(row.resolution) + "," + row.outer_a.to_string() + "," +
               row.sum_estimate.to_string() + "," + rep.exact_a.to_string() + "," +
               rep.exact_sum.to_string() + "\n";
    }
    return out;
}

std::string convergence_svg(const ConvergenceReport& rep) {
    const int w = 640, h = 400, ml = 60, mr = 20, mt = 20, mb = 40;
    const int pw = w - ml - mr, ph = h - mt - mb;
    const std::size_t k = rep.rows.size();

    auto xpos = [&](std::size_t i) {
        return ml + (k <= 1 ? 0 : static_cast<int>(static_cast<double>(i) * pw / (k - 1)));
    };
    auto ypos = [&](const Rat& v) {
        double t = v.num().to_double() / v.den().to_double();
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        return mt + static_cast<int>((1.0 - t) * ph);
    };
    auto polyline = [&](auto get, const char* color) {
        std::string pts;
        for (std::size_t i = 0; i < k; ++i) {
            pts += std::to_string(xpos(i)) + "," + std::to_string(ypos(get(rep.rows[i]))) + " ";
        }
        return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "  <line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt) + "\" x2=\"" +
           std::to_string(ml) + "\" y2=\"" + std::to_string(mt + ph) +
           "\" stroke=\"black\"/>\n";
    svg += "  <line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt + ph) +
           "\" x2=\"" + std::to_string(ml + pw) + "\" y2=\"" + std::to_string(mt + ph) +
           "\" stroke=\"black\"/>\n";
    // exact reference lines
    svg += "  <line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(ypos(rep.exact_a)) +
           "\" x2=\"" + std::to_string(ml + pw) + "\" y2=\"" +
           std::to_string(ypos(rep.exact_a)) +
           "\" stroke=\"#2a8\" stroke-dasharray=\"4 3\"/>\n";
    svg += "  <line x1=\"" + std::to_string(ml) + "\" y1=\"" +
           std::to_string(ypos(rep.exact_sum)) + "\" x2=\"" + std::to_string(ml + pw) +
           "\" y2=\"" + std::to_string(ypos(rep.exact_sum)) +
           "\" stroke=\"#d62\" stroke-dasharray=\"4 3\"/>\n";
    svg += polyline([](const ConvergenceRow& r) { return r.outer_a; }, "#2a8");
    svg += polyline([](const ConvergenceRow& r) { return r.sum_estimate; }, "#d62");
    // x labels
    for (std::size_t i = 0; i < k; ++i) {
        svg += "  <text x=\"" + std::to_string(xpos(i)) + "\" y=\"" +
               std::to_string(mt + ph + 16) + "\" font-size=\"11\" text-anchor=\"middle\">" +
               std::to_string(rep.rows[i].resolution) + "</text>\n";
    }
    svg += "  <text x=\"" + std::to_string(ml + 8) + "\" y=\"" + std::to_string(mt + 14) +
           "\" font-size=\"12\" fill=\"#2a8\">outer mu(A)</text>\n";
    svg += "  <text x=\"" + std::to_string(ml + 8) + "\" y=\"" + std::to_string(mt + 30) +
           "\" font-size=\"12\" fill=\"#d62\">sum estimate</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace sumlab
