#include "centro/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace centro {

namespace {

// Split `a+bi` at the last sign that starts the imaginary part. Returns
// {real-part text, imaginary-part text}; either may be empty.
std::pair<std::string, std::string> split_gaussian(const std::string& token, std::size_t line) {
    if (token.empty() || token.back() != 'i') throw parse_error("malformed scalar '" + token + "'", line);
    std::string body = token.substr(0, token.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if (body[pos] == '+' || body[pos] == '-') {
            split = pos;
            break;
        }
    }
    auto canonical_im = [](std::string im) {
        if (im.empty() || im == "+") return std::string("1");
        if (im == "-") return std::string("-1");
        if (im[0] == '+') im.erase(0, 1); // big-int parser rejects a leading '+'
        return im;
    };
    if (split == std::string::npos) return {"", canonical_im(body)};
    return {body.substr(0, split), canonical_im(body.substr(split))};
}

struct FieldSpec {
    bool prime = false;
    std::int64_t p = 0;
};

FieldSpec parse_field_spec(const std::string& text, std::size_t line) {
    if (text == "Q") return {};
    if (text.rfind("Fp:", 0) == 0) {
        FieldSpec f;
        f.prime = true;
        try {
            f.p = std::stoll(text.substr(3));
        } catch (const std::exception&) {
            throw parse_error("malformed field '" + text + "'", line);
        }
        try {
            FpElement::check_modulus(f.p);
        } catch (const arithmetic_error& e) {
            throw parse_error(e.what(), line);
        }
        return f;
    }
    throw parse_error("unknown field '" + text + "' (expected Q or Fp:<p>)", line);
}

} // namespace

GaussianRational parse_gaussian_rational(const std::string& token, std::size_t line) {
    auto [re, im] = split_gaussian(token, line);
    Rational r = re.empty() ? Rational(0) : parse_rational(re, line);
    return GaussianRational(r, parse_rational(im, line));
}

GaussianFp parse_gaussian_fp(const std::string& token, std::int64_t p, std::size_t line) {
    auto [re, im] = split_gaussian(token, line);
    FpElement r = re.empty() ? FpElement(0, p) : parse_fp(re, p, line);
    try {
        return GaussianFp(r, parse_fp(im, p, line));
    } catch (const arithmetic_error& e) {
        throw parse_error(e.what(), line);
    }
}

ParsedMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    std::size_t rows = 0, cols = 0;
    FieldSpec field;
    bool have_header = false;
    std::vector<std::pair<std::string, std::size_t>> tokens; // token, line

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string a, b, c, extra;
            if (!(ls >> a)) continue;
            if (!(ls >> b)) throw parse_error("header must be `rows cols [field]`", lineno);
            try {
                rows = std::stoul(a);
                cols = std::stoul(b);
            } catch (const std::exception&) {
                throw parse_error("malformed dimensions '" + a + " " + b + "'", lineno);
            }
            if (rows == 0 || cols == 0) throw parse_error("dimensions must be positive", lineno);
            if (ls >> c) field = parse_field_spec(c, lineno);
            if (ls >> extra) throw parse_error("trailing token '" + extra + "' in header", lineno);
            have_header = true;
            continue;
        }
        std::string tok;
        while (ls >> tok) tokens.emplace_back(tok, lineno);
    }
    if (!have_header) throw parse_error("empty matrix file", lineno ? lineno : 1);
    if (tokens.size() != rows * cols)
        throw parse_error("expected " + std::to_string(rows * cols) + " entries, found " +
                              std::to_string(tokens.size()),
                          lineno);

    bool gaussian = false;
    for (const auto& [tok, ln] : tokens)
        if (tok.back() == 'i') { gaussian = true; break; }

    if (!field.prime && !gaussian) {
        Matrix<Rational> m(rows, cols, Rational(0));
        std::size_t t = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j, ++t)
                m(i, j) = parse_rational(tokens[t].first, tokens[t].second);
        return m;
    }
    if (!field.prime && gaussian) {
        Matrix<GaussianRational> m(rows, cols, GaussianRational(Rational(0), Rational(0)));
        std::size_t t = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j, ++t) {
                const auto& [tok, ln] = tokens[t];
                m(i, j) = tok.back() == 'i' ? parse_gaussian_rational(tok, ln)
                                            : GaussianRational(parse_rational(tok, ln), Rational(0));
            }
        return m;
    }
    if (field.prime && !gaussian) {
        Matrix<FpElement> m(rows, cols, FpElement(0, field.p));
        std::size_t t = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j, ++t)
                m(i, j) = parse_fp(tokens[t].first, field.p, tokens[t].second);
        return m;
    }
    try {
        Matrix<GaussianFp> m(rows, cols, GaussianFp(FpElement(0, field.p), FpElement(0, field.p)));
        std::size_t t = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j, ++t) {
                const auto& [tok, ln] = tokens[t];
                m(i, j) = tok.back() == 'i'
                              ? parse_gaussian_fp(tok, field.p, ln)
                              : GaussianFp(parse_fp(tok, field.p, ln), FpElement(0, field.p));
            }
        return m;
    } catch (const arithmetic_error& e) {
        throw parse_error(e.what()); // Gaussian entries over F_p with p == 1 mod 4
    }
}

ParsedMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

ParsedMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    return parse_matrix(in);
}

std::string print_matrix(const ParsedMatrix& pm) {
    return std::visit(
        [](const auto& m) -> std::string {
            using S = std::decay_t<decltype(m.at(0, 0))>;
            std::string header = std::to_string(m.rows()) + " " + std::to_string(m.cols());
            if constexpr (std::is_same_v<S, FpElement>)
                header += " Fp:" + std::to_string(m.exemplar().modulus());
            else if constexpr (std::is_same_v<S, GaussianFp>)
                header += " Fp:" + std::to_string(m.exemplar().real().modulus());
            else
                header += " Q";
            return header + "\n" + print_matrix_body(m);
        },
        pm);
}

} // namespace centro
