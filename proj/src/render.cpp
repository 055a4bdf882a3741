#include "wpq/render.hpp"

#include "wpq/height.hpp"

#include <sstream>

namespace wpq {

std::string to_decimal(const Rat& v, unsigned digits) {
    bool neg = v < 0;
    Rat a = neg ? Rat(-v) : v;
    Int scale = pow_int(10, digits);
    // round half away from zero: floor(a*scale + 1/2)
    Rat scaled = a * Rat(scale) + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(scaled.get_num()).get_mpz_t(),
               Int(scaled.get_den()).get_mpz_t());
    Int whole = q / scale;
    Int frac = q % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out = (neg && (whole != 0 || frac != 0) ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + fs;
    return out;
}

std::string mid_string(const BoundedReal& b, unsigned digits) {
    return to_decimal(b.mid(), digits);
}

std::string width_string(const BoundedReal& b, unsigned digits) {
    return to_decimal(b.width(), digits);
}

namespace {

std::string rat_str(const Rat& v) { return v.get_str(); }

nlohmann::json point_json(const WeightedPoint& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& c : p.coords) arr.push_back(rat_str(c));
    return arr;
}

}  // namespace

nlohmann::json lift_result_json(const LiftResult& r) {
    nlohmann::json j;
    j["liftable"] = r.liftable;
    if (r.liftable) {
        j["lambda"] = rat_str(*r.lambda);
        j["witness"] = point_json(*r.witness);
        j["obstruction"] = nullptr;
    } else {
        j["lambda"] = nullptr;
        j["witness"] = nullptr;
        nlohmann::json ob;
        if (std::holds_alternative<CongruenceObstruction>(r.obstruction)) {
            const auto& c = std::get<CongruenceObstruction>(r.obstruction);
            ob["type"] = "congruence";
            ob["prime"] = c.prime.get_str();
            nlohmann::json rs = nlohmann::json::array();
            for (const auto& e : c.residues)
                rs.push_back({{"index", e.index}, {"residue", e.residue}, {"modulus", e.modulus}});
            ob["residues"] = rs;
            ob["incompatible_pair"] = {c.residues[c.bad_i].index, c.residues[c.bad_j].index};
        } else if (std::holds_alternative<SignObstruction>(r.obstruction)) {
            const auto& s = std::get<SignObstruction>(r.obstruction);
            ob["type"] = "sign";
            ob["positive_index"] = s.index_pos;
            ob["negative_index"] = s.index_neg;
        } else if (std::holds_alternative<SearchExhausted>(r.obstruction)) {
            ob["type"] = "search-exhausted";
            ob["exponent_bound"] = std::get<SearchExhausted>(r.obstruction).exponent_bound;
        }
        j["obstruction"] = ob;
    }
    return j;
}

nlohmann::json sparsity_json(const SparsityRecord& r) {
    nlohmann::json j;
    j["bound"] = r.bound;
    j["total"] = r.total;
    j["liftable"] = r.liftable;
    j["density"] = rat_str(r.density);
    j["density_decimal"] = to_decimal(r.density, 9);
    return j;
}

nlohmann::json constant_json(const BoundedReal& constant, const Rat& exponent,
                             const Rat& error_exponent, int log_power) {
    nlohmann::json j;
    j["constant_mid"] = mid_string(constant);
    j["constant_width"] = width_string(constant);
    j["exponent"] = rat_str(exponent);
    j["error_exponent"] = rat_str(error_exponent);
    j["log_power"] = log_power;
    return j;
}

nlohmann::json height_json(const ExactHeight& h, unsigned digits) {
    nlohmann::json j;
    j["exact"] = h.to_string();
    j["radicand"] = rat_str(h.radicand);
    j["root"] = h.root;
    j["decimal"] = mid_string(h.enclosure(digits), digits);
    return j;
}

std::string count_records_csv(const std::vector<CountRecord>& records) {
    std::ostringstream out;
    out << "X,direct_size,fast_size,height_count,predicted_mid,predicted_width,ratio_mid,"
           "ratio_width\n";
    for (const CountRecord& r : records) {
        out << rat_str(r.X) << ',';
        if (r.direct_size) out << r.direct_size->get_str();
        out << ',' << r.fast_size.get_str() << ',';
        if (r.height_count) out << r.height_count->get_str();
        out << ',' << mid_string(r.predicted) << ',' << width_string(r.predicted) << ','
            << mid_string(r.ratio) << ',' << width_string(r.ratio) << '\n';
    }
    return out.str();
}

}  // namespace wpq
