#include "cls/loop_algebra.hpp"

namespace cls {

bool valid_loop_gen(const LoopGenId& g) {
    Rational twice = g.weight * Rational(2);
    if (!twice.is_integer()) return false;
    bool integer_weight = g.weight.is_integer();
    return g.kind == GenKind::L ? integer_weight : !integer_weight;
}

LoopGenId loop_L(long weight, int loop) { return {GenKind::L, Rational(weight), loop}; }

LoopGenId loop_G(const Rational& weight, int loop) {
    LoopGenId g{GenKind::G, weight, loop};
    if (!valid_loop_gen(g)) throw Error("G weight must lie in 1/2 + Z");
    return g;
}

std::string loop_gen_name(const LoopGenId& g) {
    return std::string(g.kind == GenKind::L ? "L" : "G") + "(" + g.weight.str() + ", " +
           std::to_string(g.loop) + ")";
}

LoopElement LoopElement::generator(const LoopGenId& g) {
    LoopElement e;
    e.add(g, Rational(1));
    return e;
}

void LoopElement::add(const LoopGenId& g, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LoopElement LoopElement::scaled(const Rational& c) const {
    LoopElement r;
    for (const auto& [g, k] : terms_) r.add(g, k * c);
    return r;
}

LoopElement loop_bracket(const LoopGenId& x, const LoopGenId& y) {
    LoopElement r;
    if (x.kind == GenKind::L && y.kind == GenKind::L) {
        r.add({GenKind::L, x.weight + y.weight, x.loop + y.loop}, x.weight - y.weight);
    } else if (x.kind == GenKind::L && y.kind == GenKind::G) {
        r.add({GenKind::G, x.weight + y.weight, x.loop + y.loop}, x.weight / Rational(2) - y.weight);
    } else if (x.kind == GenKind::G && y.kind == GenKind::L) {
        // [G, L] = -[L, G] (even-odd pair).
        r.add({GenKind::G, x.weight + y.weight, x.loop + y.loop},
              -(y.weight / Rational(2) - x.weight));
    } else {
        r.add({GenKind::L, x.weight + y.weight, x.loop + y.loop}, Rational(2));
    }
    return r;
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
    LoopElement r;
    for (const auto& [gx, cx] : x.support())
        for (const auto& [gy, cy] : y.support()) r += loop_bracket(gx, gy).scaled(cx * cy);
    return r;
}

LoopElement loop_skew_residual(const LoopGenId& x, const LoopGenId& y) {
    LoopElement r = loop_bracket(x, y);
    LoopElement yx = loop_bracket(y, x);
    if (koszul_sign(x.parity(), y.parity()) > 0)
        r += yx;
    else
        r -= yx;
    return r;
}

LoopElement loop_jacobi_residual(const LoopGenId& x, const LoopGenId& y, const LoopGenId& z) {
    LoopElement ex = LoopElement::generator(x);
    LoopElement ey = LoopElement::generator(y);
    LoopElement ez = LoopElement::generator(z);
    LoopElement r = loop_bracket(ex, loop_bracket(ey, ez));
    r -= loop_bracket(loop_bracket(ex, ey), ez);
    LoopElement third = loop_bracket(ey, loop_bracket(ex, ez));
    if (koszul_sign(x.parity(), y.parity()) > 0)
        r -= third;
    else
        r += third;
    return r;
}

std::string print_loop_element(const LoopElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : e.support()) {
        int sign = c.sign();
        Rational mag = sign < 0 ? -c : c;
        if (first) {
            if (sign < 0) out += "-";
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += loop_gen_name(g);
        first = false;
    }
    return out;
}

}  // namespace cls
