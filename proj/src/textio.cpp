#include "kseg/textio.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace kseg {

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, Signature sig)
        : text_(text), sig_(sig), out_(sig) {}

    Element run() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
            skip_ws();
        }
        parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            const char op = text_[pos_];
            if (op != '+' && op != '-')
                throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            parse_term(op == '-');
            skip_ws();
        }
        return out_.take();
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void parse_term(bool negative) {
        double coeff = 1.0;
        BladeMask mask = 0;
        const char c = peek();
        if (c == 'e') {
            mask = parse_blade();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            coeff = parse_number();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'e')
                    throw SyntaxError("expected blade after '*'", pos_);
                mask = parse_blade();
            }
        } else {
            throw SyntaxError("expected number or blade", pos_);
        }
        out_[mask] += negative ? -coeff : coeff;
    }

    double parse_number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin)
            throw SyntaxError("malformed number", pos_);
        if (!std::isfinite(value))
            throw SyntaxError("non-finite number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        return value;
    }

    BladeMask parse_blade() {
        ++pos_; // consume 'e'
        if (peek() == '{')
            return parse_general_blade();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected blade indices after 'e'", pos_);
        if (sig_.n() > 9)
            throw SyntaxError("compact blade form requires n <= 9; use e{...}", pos_ - 1);
        BladeMask mask = 0;
        int last = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const int idx = text_[pos_] - '0';
            check_index(idx, pos_);
            if (idx <= last)
                throw NonCanonicalBlade("blade indices must be strictly increasing");
            last = idx;
            mask |= BladeMask{1} << (idx - 1);
            ++pos_;
        }
        return mask;
    }

    BladeMask parse_general_blade() {
        ++pos_; // consume '{'
        skip_ws();
        BladeMask mask = 0;
        int last = 0;
        if (peek() == '}') {
            ++pos_;
            return mask; // e{} is the scalar blade
        }
        while (true) {
            const std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected blade index", pos_);
            int idx = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = idx * 10 + (text_[pos_] - '0');
                if (idx > Signature::kMaxGenerators)
                    break;
                ++pos_;
            }
            check_index(idx, at);
            if (idx <= last)
                throw NonCanonicalBlade("blade indices must be strictly increasing");
            last = idx;
            mask |= BladeMask{1} << (idx - 1);
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                continue;
            }
            if (peek() == '}') {
                ++pos_;
                return mask;
            }
            throw SyntaxError("expected ',' or '}' in blade", pos_);
        }
    }

    void check_index(int idx, std::size_t at) const {
        if (idx < 1 || idx > sig_.n())
            throw IndexOutOfRange("blade index " + std::to_string(idx) +
                                  " out of range for " + sig_.str() +
                                  " (at position " + std::to_string(at) + ")");
    }

    const std::string& text_;
    Signature sig_;
    ElementBuilder out_;
    std::size_t pos_ = 0;
};

std::string format_coeff(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace

Element parse_element(const std::string& text, Signature sig) {
    return ExprParser(text, sig).run();
}

std::string blade_name(BladeMask mask, int n, bool general) {
    if (n <= 9 && !general) {
        std::string name = "e";
        for (int k = 1; k <= n; ++k)
            if (mask & (BladeMask{1} << (k - 1)))
                name += static_cast<char>('0' + k);
        return name;
    }
    std::string name = "e{";
    bool first = true;
    for (int k = 1; k <= n; ++k) {
        if (!(mask & (BladeMask{1} << (k - 1))))
            continue;
        if (!first)
            name += ',';
        name += std::to_string(k);
        first = false;
    }
    return name + "}";
}

std::string print_element(const Element& u) {
    std::string out;
    for (std::size_t m = 0; m < u.dim(); ++m) {
        const double c = u[static_cast<BladeMask>(m)];
        if (c == 0.0)
            continue;
        const bool negative = std::signbit(c);
        const double mag = std::abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m == 0) {
            out += format_coeff(mag);
        } else {
            if (mag != 1.0)
                out += format_coeff(mag) + "*";
            out += blade_name(static_cast<BladeMask>(m), u.sig().n());
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const Element& u, bool sparse) {
    nlohmann::json doc;
    doc["format"] = 1;
    doc["sig"] = {u.sig().p, u.sig().q};
    if (!sparse) {
        doc["coeffs"] = std::vector<double>(u.coeffs().begin(), u.coeffs().end());
        return doc;
    }
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t m = 0; m < u.dim(); ++m) {
        const double c = u[static_cast<BladeMask>(m)];
        if (c != 0.0)
            coeffs[blade_name(static_cast<BladeMask>(m), u.sig().n(), /*general=*/true)] = c;
    }
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

Element from_json(const nlohmann::json& doc, int n_cap) {
    if (!doc.is_object())
        throw SchemaError("element document must be a JSON object");
    if (!doc.contains("format") || !doc["format"].is_number_integer() ||
        doc["format"].get<int>() != 1)
        throw SchemaError("unsupported or missing document format");
    if (!doc.contains("sig") || !doc["sig"].is_array() || doc["sig"].size() != 2 ||
        !doc["sig"][0].is_number_integer() || !doc["sig"][1].is_number_integer())
        throw SchemaError("sig must be an array [p, q] of integers");
    const int p = doc["sig"][0].get<int>();
    const int q = doc["sig"][1].get<int>();
    if (p < 0 || q < 0)
        throw SchemaError("sig entries must be nonnegative");
    if (p + q > n_cap)
        throw SchemaError("sig exceeds the accepted generator cap " + std::to_string(n_cap));
    const Signature sig(p, q);

    if (!doc.contains("coeffs"))
        throw SchemaError("missing coeffs");
    const nlohmann::json& coeffs = doc["coeffs"];
    if (coeffs.is_array()) {
        if (coeffs.size() != sig.dim())
            throw DimensionMismatch("dense coeffs length " + std::to_string(coeffs.size()) +
                                    " does not match dimension " + std::to_string(sig.dim()));
        std::vector<double> values(sig.dim());
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!coeffs[i].is_number())
                throw SchemaError("dense coeffs entries must be numbers");
            values[i] = coeffs[i].get<double>();
        }
        return Element(sig, std::move(values));
    }
    if (coeffs.is_object()) {
        ElementBuilder out(sig);
        for (const auto& [key, value] : coeffs.items()) {
            if (!value.is_number())
                throw SchemaError("sparse coeffs values must be numbers");
            Element term(sig);
            try {
                term = parse_element(key, sig);
            } catch (const Error& e) {
                throw SchemaError("invalid blade key '" + key + "': " + e.what());
            }
            // A valid key is exactly one canonical blade name with
            // coefficient 1.
            BladeMask mask = 0;
            int hits = 0;
            for (std::size_t m = 0; m < term.dim(); ++m)
                if (term[static_cast<BladeMask>(m)] != 0.0) {
                    mask = static_cast<BladeMask>(m);
                    ++hits;
                }
            if (key.rfind("e{", 0) != 0 || hits != 1 || term[mask] != 1.0)
                throw SchemaError("invalid blade key '" + key + "'");
            out[mask] += value.get<double>();
        }
        return out.take();
    }
    throw SchemaError("coeffs must be a dense array or a sparse object");
}

} // namespace kseg
