#include "graphzeta/io.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>

namespace graphzeta {

namespace {

using Json = nlohmann::ordered_json;

double tidy(double x) { return x == 0.0 ? 0.0 : x; }

Json number(double x) {
    if (!std::isfinite(x)) return Json(std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf"));
    return Json(tidy(x));
}

Json complex_json(Complex z) {
    Json j;
    j["re"] = number(z.real());
    j["im"] = number(z.imag());
    return j;
}

Json zeros_json(const std::vector<ZeroEntry>& zeros) {
    Json arr = Json::array();
    for (const auto& z : zeros) {
        Json e;
        e["gamma"] = z.gamma.is_infinite() ? Json("inf") : number(z.gamma.value());
        e["mult"] = z.multiplicity;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string critical_point_text(const Ordinate& gamma) {
    if (gamma.is_infinite()) return "1/2 + i*inf";
    const double g = tidy(gamma.value());
    if (g == 0.0) return "1/2";
    return std::string("1/2 ") + (g < 0 ? "- " : "+ ") + "i*" + text_number(std::abs(g));
}

}  // namespace

std::string shortest_decimal(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), tidy(x));
    return {buf.data(), ptr};
}

std::string text_number(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), tidy(x), std::chars_format::general, 12);
    return {buf.data(), ptr};
}

std::string matrix_to_json(const RealMatrix& m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
        data.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = std::move(data);
    return j.dump();
}

std::string matrix_to_csv(const RealMatrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += shortest_decimal(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string spectrum_to_json(const Spectrum& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries()) {
        Json j = complex_json(e.value);
        j["mult"] = e.multiplicity;
        entries.push_back(std::move(j));
    }
    Json j;
    j["entries"] = std::move(entries);
    j["tol"] = s.tol();
    return j.dump();
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "re,im,mult\n";
    for (const auto& e : s.entries())
        out += shortest_decimal(e.value.real()) + ',' + shortest_decimal(e.value.imag()) + ',' +
               std::to_string(e.multiplicity) + '\n';
    return out;
}

std::string spectrum_to_text(const Spectrum& s) {
    std::string out;
    for (const auto& e : s.entries()) {
        const double im = tidy(e.value.imag());
        out += text_number(e.value.real());
        if (im != 0.0) out += std::string(im < 0 ? " - " : " + ") + "i*" + text_number(std::abs(im));
        out += " (x" + std::to_string(e.multiplicity) + ")\n";
    }
    return out;
}

std::string zero_set_to_json(const ZeroSet& z) {
    Json j;
    j["case"] = case_tag(z.edge_case);
    j["zeros"] = zeros_json(z.zeros);
    return j.dump();
}

std::string zero_set_to_csv(const ZeroSet& z) {
    std::string out = "re,gamma,mult\n";
    for (const auto& e : z.zeros)
        if (!e.gamma.is_infinite())
            out += "0.5," + shortest_decimal(e.gamma.value()) + ',' + std::to_string(e.multiplicity) + '\n';
    return out;
}

std::string zero_set_to_text(const ZeroSet& z) {
    std::string out = "case: " + case_tag(z.edge_case) + '\n';
    for (const auto& e : z.zeros) out += critical_point_text(e.gamma) + " (x" + std::to_string(e.multiplicity) + ")\n";
    return out;
}

std::string m_spectrum_to_json(const MSpectrum& m) {
    Json finite = Json::array();
    for (const auto& e : m.finite) {
        Json j;
        j["value"] = number(e.value);
        j["mult"] = e.multiplicity;
        finite.push_back(std::move(j));
    }
    Json j;
    j["finite"] = std::move(finite);
    j["infinite_mult"] = m.infinite_multiplicity;
    return j.dump();
}

std::string m_spectrum_to_text(const MSpectrum& m) {
    std::string out = "inf (x" + std::to_string(m.infinite_multiplicity) + ")\n";
    for (const auto& e : m.finite) out += text_number(e.value) + " (x" + std::to_string(e.multiplicity) + ")\n";
    return out;
}

std::string report_to_json(const VerificationReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json j;
        j["point"] = complex_json(s.point);
        j["lhs"] = complex_json(s.lhs);
        j["rhs"] = complex_json(s.rhs);
        j["abs_residual"] = number(s.abs_residual);
        j["rel_residual"] = number(s.rel_residual);
        samples.push_back(std::move(j));
    }
    Json j;
    j["identity"] = r.identity_name;
    j["passed"] = r.passed;
    j["max_rel_residual"] = number(r.max_rel_residual);
    j["tolerance"] = number(r.tolerance);
    if (!r.note.empty()) j["note"] = r.note;
    j["samples"] = std::move(samples);
    return j.dump();
}

std::string report_to_text(const VerificationReport& r) {
    std::string out = r.identity_name + ": " + (r.passed ? "PASS" : "FAIL") + " samples=" +
                      std::to_string(r.samples.size()) + " max_rel_residual=" + text_number(r.max_rel_residual) +
                      " tolerance=" + text_number(r.tolerance);
    if (!r.note.empty()) out += " (" + r.note + ")";
    return out + '\n';
}

}  // namespace graphzeta
