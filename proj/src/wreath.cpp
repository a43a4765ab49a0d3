#include "sylow/wreath.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "sylow/blocks.hpp"

namespace sylow {

std::string IrrLabel::to_string() const {
    std::ostringstream os;
    if (kind == Kind::extension) {
        os << "X(" << inner << ";" << twist << ")";
    } else {
        os << "Ind(";
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) os << ',';
            os << tuple[i];
        }
        os << ")";
    }
    return os.str();
}

std::string ClassLabel::to_string() const {
    std::ostringstream os;
    if (kind == Kind::base) {
        os << "Base(";
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) os << ',';
            os << tuple[i];
        }
        os << ")";
    } else {
        os << "Tw(" << product << ";" << top << ")";
    }
    return os.str();
}

std::vector<int> canonical_rotation(const std::vector<int>& tuple) {
    std::vector<int> best = tuple;
    std::vector<int> rotated = tuple;
    for (size_t r = 1; r < tuple.size(); ++r) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        if (rotated < best) best = rotated;
    }
    return best;
}

int WreathLevel::induced_at(const std::vector<int>& canonical) const {
    auto it = induced_index.find(canonical);
    if (it == induced_index.end())
        throw std::logic_error("unknown induced label tuple");
    return it->second;
}

std::vector<int> WreathLevel::labels_of_degree(int k) const {
    std::vector<int> out;
    for (size_t i = 0; i < irr.size(); ++i)
        if (irr[i].degree_exponent == k) out.push_back(int(i));
    return out;
}

int WreathTower::default_bound(int p) { return p <= 3 ? 3 : 2; }

WreathTower::WreathTower(int p, int max_level) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    max_level_ = max_level < 0 ? default_bound(p) : max_level;
    for (int m = 0; m <= max_level_; ++m) build_level(m);
    tables_.resize(levels_.size());
    aggregates_.resize(levels_.size());
}

const WreathLevel& WreathTower::level(int m) const {
    if (m < 0) throw std::invalid_argument("negative wreath level");
    if (m > max_level_) {
        std::ostringstream os;
        os << "scope exceeded: level " << m << " for p = " << p_
           << " is beyond the configured bound " << max_level_
           << " (raise the bound explicitly if the label count is feasible)";
        throw ScopeError(os.str());
    }
    return levels_[size_t(m)];
}

void WreathTower::build_level(int m) {
    WreathLevel out;
    out.p = p_;
    out.level = m;
    if (m == 0) {
        out.group_order = 1;
        IrrLabel triv;
        triv.kind = IrrLabel::Kind::extension;
        triv.degree_exponent = 0;
        out.irr.push_back(triv);
        out.extension_index.assign(size_t(p_), 0);
        ClassLabel id;
        id.kind = ClassLabel::Kind::base;
        id.cycle_type = Partition({1});
        id.size = 1;
        out.classes.push_back(id);
        out.type_reps.push_back(Partition({1}));
        out.class_type.push_back(0);
        out.max_exponent = 0;
        levels_.push_back(std::move(out));
        return;
    }

    const WreathLevel& prev = levels_[size_t(m) - 1];
    const size_t k_prev = prev.irr.size();

    // Feasibility: the label count one level up.
    Bint k_next = Bint(p_) * k_prev;
    Bint pow = 1;
    for (int i = 0; i < p_; ++i) pow *= k_prev;
    k_next += (pow - k_prev) / p_;
    if (k_next > 5'000'000) {
        std::ostringstream os;
        os << "scope exceeded: level " << m << " for p = " << p_ << " has "
           << k_next << " irreducible labels (roughly "
           << (k_next * 64 / (1024 * 1024)) << " MiB of labels alone)";
        throw ScopeError(os.str());
    }

    out.group_order = p_;
    for (int i = 0; i < p_; ++i) out.group_order *= prev.group_order;

    // Extensions first, ordered by (inner, twist).
    out.extension_index.assign(k_prev * size_t(p_), -1);
    for (size_t inner = 0; inner < k_prev; ++inner)
        for (int twist = 0; twist < p_; ++twist) {
            IrrLabel lab;
            lab.kind = IrrLabel::Kind::extension;
            lab.inner = int(inner);
            lab.twist = twist;
            lab.degree_exponent = p_ * prev.irr[inner].degree_exponent;
            out.extension_index[inner * size_t(p_) + size_t(twist)] =
                int(out.irr.size());
            out.irr.push_back(std::move(lab));
        }

    // Induced labels: canonical non-constant tuples in lex order.
    {
        std::vector<int> tuple(size_t(p_), 0);
        bool done = false;
        while (!done) {
            bool constant = true;
            for (int v : tuple)
                if (v != tuple[0]) constant = false;
            if (!constant && tuple == canonical_rotation(tuple)) {
                IrrLabel lab;
                lab.kind = IrrLabel::Kind::induced;
                lab.tuple = tuple;
                lab.degree_exponent = 1;
                for (int v : tuple)
                    lab.degree_exponent += prev.irr[size_t(v)].degree_exponent;
                out.induced_index.emplace(tuple, int(out.irr.size()));
                out.irr.push_back(std::move(lab));
            }
            int pos = p_ - 1;
            while (pos >= 0 && tuple[size_t(pos)] == int(k_prev) - 1) {
                tuple[size_t(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                done = true;
            else
                ++tuple[size_t(pos)];
        }
    }
    if (Bint(out.irr.size()) != k_next)
        throw std::logic_error("label count does not satisfy the wreath recursion");

    // Base classes: canonical tuples of lower classes, lex order.
    const size_t c_prev = prev.classes.size();
    {
        std::vector<int> tuple(size_t(p_), 0);
        bool done = false;
        while (!done) {
            bool constant = true;
            for (int v : tuple)
                if (v != tuple[0]) constant = false;
            if (tuple == canonical_rotation(tuple)) {
                ClassLabel cls;
                cls.kind = ClassLabel::Kind::base;
                cls.tuple = tuple;
                std::vector<CycleType> parts;
                Bint size_product = 1;
                for (int v : tuple) {
                    parts.push_back(prev.classes[size_t(v)].cycle_type);
                    size_product *= prev.classes[size_t(v)].size;
                }
                cls.cycle_type = concat_cycle_types(parts);
                cls.size = constant ? size_product : Bint(p_) * size_product;
                out.base_index.emplace(tuple, int(out.classes.size()));
                out.classes.push_back(std::move(cls));
            }
            int pos = p_ - 1;
            while (pos >= 0 && tuple[size_t(pos)] == int(c_prev) - 1) {
                tuple[size_t(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                done = true;
            else
                ++tuple[size_t(pos)];
        }
    }

    // Twisted classes: one per (cycle-product class, nonzero top power).
    Bint base_pow = 1;
    for (int i = 0; i < p_ - 1; ++i) base_pow *= prev.group_order;
    out.twisted_offset.assign(c_prev * size_t(p_ - 1), -1);
    for (size_t product = 0; product < c_prev; ++product)
        for (int top = 1; top < p_; ++top) {
            ClassLabel cls;
            cls.kind = ClassLabel::Kind::twisted;
            cls.product = int(product);
            cls.top = top;
            cls.cycle_type = scale_cycle_type(prev.classes[product].cycle_type, p_);
            cls.size = base_pow * prev.classes[product].size;
            out.twisted_offset[product * size_t(p_ - 1) + size_t(top - 1)] =
                int(out.classes.size());
            out.classes.push_back(std::move(cls));
        }

    if (out.classes.size() != out.irr.size())
        throw std::logic_error("class count does not match label count");
    Bint total = 0;
    for (const ClassLabel& cls : out.classes) total += cls.size;
    if (total != out.group_order)
        throw std::logic_error("class equation fails at wreath level build");

    out.max_exponent = 0;
    std::map<Partition, int> type_of;
    for (const ClassLabel& cls : out.classes) {
        auto [it, fresh] = type_of.emplace(cls.cycle_type, int(out.type_reps.size()));
        if (fresh) out.type_reps.push_back(cls.cycle_type);
        out.class_type.push_back(it->second);
    }
    for (const IrrLabel& lab : out.irr)
        out.max_exponent = std::max(out.max_exponent, lab.degree_exponent);

    levels_.push_back(std::move(out));
}

CycI WreathTower::base_value(int m, int irr_idx,
                             const std::vector<int>& tuple) const {
    const WreathLevel& lvl = level(m);
    const IrrLabel& lab = lvl.irr[size_t(irr_idx)];
    const int sub = m - 1;
    auto lower = [&](int i, int c) -> const CycI& { return table(sub)[size_t(i)][size_t(c)]; };
    if (lab.kind == IrrLabel::Kind::extension) {
        CycI acc = CycI::integer(p_, sub, 1);
        for (int v : tuple) acc = acc * lower(lab.inner, v);
        return acc;
    }
    CycI acc(p_, sub);
    for (int rot = 0; rot < p_; ++rot) {
        CycI term = CycI::integer(p_, sub, 1);
        for (int l = 0; l < p_; ++l)
            term = term * lower(lab.tuple[size_t((l + rot) % p_)], tuple[size_t(l)]);
        acc += term;
    }
    return acc;
}

CycI WreathTower::value(int m, int irr_idx, int class_idx) const {
    if (m == 0) return CycI::integer(p_, 0, 1);
    const WreathLevel& lvl = level(m);
    const ClassLabel& cls = lvl.classes[size_t(class_idx)];
    const IrrLabel& lab = lvl.irr[size_t(irr_idx)];
    if (cls.kind == ClassLabel::Kind::base)
        return base_value(m, irr_idx, cls.tuple).embed_into(m);
    if (lab.kind == IrrLabel::Kind::induced) return CycI(p_, m);
    CycI inner = table(m - 1)[size_t(lab.inner)][size_t(cls.product)].embed_into(m);
    long long block = CycI::order_of(p_, m - 1);
    return inner * CycI::zeta_pow(p_, m, (long long)lab.twist * cls.top * block);
}

const std::vector<std::vector<CycI>>& WreathTower::table(int m) const {
    level(m);  // scope check
    {
        // Full tables are held only while they stay small.
        const WreathLevel& lvl = levels_[size_t(m)];
        double bytes = double(lvl.irr.size()) * double(lvl.classes.size()) *
                       double(CycI::order_of(p_, m)) * 8.0;
        if (bytes > 200.0 * 1024 * 1024)
            throw std::logic_error("full value table too large to cache");
    }
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    for (int mm = 0; mm <= m; ++mm) {
        if (!tables_[size_t(mm)].empty()) continue;
        const WreathLevel& lvl = levels_[size_t(mm)];
        std::vector<std::vector<CycI>> tab(
            lvl.irr.size(), std::vector<CycI>(lvl.classes.size()));
        for (size_t i = 0; i < lvl.irr.size(); ++i)
            for (size_t c = 0; c < lvl.classes.size(); ++c) {
                if (mm == 0) {
                    tab[i][c] = CycI::integer(p_, 0, 1);
                    continue;
                }
                const ClassLabel& cls = lvl.classes[c];
                const IrrLabel& lab = lvl.irr[i];
                if (cls.kind == ClassLabel::Kind::base) {
                    // unlocked variant of base_value against tables_[mm-1]
                    const auto& lower = tables_[size_t(mm) - 1];
                    if (lab.kind == IrrLabel::Kind::extension) {
                        CycI acc = CycI::integer(p_, mm - 1, 1);
                        for (int v : cls.tuple)
                            acc = acc * lower[size_t(lab.inner)][size_t(v)];
                        tab[i][c] = acc.embed_into(mm);
                    } else {
                        CycI acc(p_, mm - 1);
                        for (int rot = 0; rot < p_; ++rot) {
                            CycI term = CycI::integer(p_, mm - 1, 1);
                            for (int l = 0; l < p_; ++l)
                                term = term *
                                       lower[size_t(lab.tuple[size_t((l + rot) % p_)])]
                                            [size_t(cls.tuple[size_t(l)])];
                            acc += term;
                        }
                        tab[i][c] = acc.embed_into(mm);
                    }
                } else if (lab.kind == IrrLabel::Kind::induced) {
                    tab[i][c] = CycI(p_, mm);
                } else {
                    CycI inner = tables_[size_t(mm) - 1][size_t(lab.inner)]
                                        [size_t(cls.product)]
                                            .embed_into(mm);
                    long long block = CycI::order_of(p_, mm - 1);
                    tab[i][c] = inner * CycI::zeta_pow(
                                            p_, mm,
                                            (long long)lab.twist * cls.top * block);
                }
            }
        tables_[size_t(mm)] = std::move(tab);
    }
    return tables_[size_t(m)];
}

const std::vector<std::vector<CycI>>& WreathTower::aggregates(int m) const {
    level(m);  // scope check
    if (m > 0) table(m - 1);  // prebuild lower tables
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!aggregates_[size_t(m)].empty()) return aggregates_[size_t(m)];
    const WreathLevel& lvl = levels_[size_t(m)];
    std::vector<std::vector<CycI>> agg(
        lvl.irr.size(),
        std::vector<CycI>(lvl.type_reps.size(), CycI(p_, m)));
    for (size_t c = 0; c < lvl.classes.size(); ++c) {
        long long size = 0;
        if (lvl.classes[c].size > Bint(std::numeric_limits<long long>::max()))
            throw std::logic_error("class size exceeds the aggregate fast path");
        size = (long long)lvl.classes[c].size;
        int type = lvl.class_type[c];
        for (size_t i = 0; i < lvl.irr.size(); ++i) {
            CycI v = value(m, int(i), int(c)).conj();
            agg[i][size_t(type)].add_scaled(v, size);
        }
    }
    aggregates_[size_t(m)] = std::move(agg);
    return aggregates_[size_t(m)];
}

namespace {

long long ll_pow(int p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

TableCheck verify_table(const WreathTower& tower, int m, unsigned sample_seed,
                        int sample_pairs) {
    TableCheck rep;
    rep.p = tower.p();
    rep.level = m;
    const WreathLevel& lvl = tower.level(m);
    rep.label_count = lvl.irr.size();
    rep.class_count = lvl.classes.size();
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    rep.counts_match = lvl.irr.size() == lvl.classes.size();
    if (!rep.counts_match) fail("label and class counts differ");

    // sum of squared degrees = |P|
    {
        Bint total = 0;
        for (const IrrLabel& lab : lvl.irr) {
            Bint d = 1;
            for (int i = 0; i < lab.degree_exponent; ++i) d *= tower.p();
            total += d * d;
        }
        rep.degree_square_sum_ok = total == lvl.group_order;
        if (!rep.degree_square_sum_ok) fail("sum of squared degrees != |P|");
    }

    // class equation
    {
        Bint total = 0;
        for (const ClassLabel& cls : lvl.classes) total += cls.size;
        rep.class_equation_ok = total == lvl.group_order;
        if (!rep.class_equation_ok) fail("class equation fails");
    }

    // identity column carries the degrees
    {
        rep.identity_column_ok = true;
        Partition identity_type(std::vector<int>(size_t(ll_pow(tower.p(), m)), 1));
        if (lvl.classes[0].cycle_type != identity_type) {
            rep.identity_column_ok = false;
            fail("class 0 is not the identity class");
        }
        for (size_t i = 0; i < lvl.irr.size() && rep.identity_column_ok; ++i) {
            CycI v = tower.value(m, int(i), 0);
            if (!v.is_rational() ||
                v.rational() != ll_pow(tower.p(), lvl.irr[i].degree_exponent)) {
                rep.identity_column_ok = false;
                fail("identity value != degree for label " + lvl.irr[i].to_string());
            }
        }
    }

    // attained exponents form the full interval [0, alpha]; odd p only
    if (tower.p() != 2) {
        int alpha = max_degree_exponent_prime_power(m, tower.p());
        std::vector<char> seen(size_t(alpha) + 1, 0);
        bool ok = lvl.max_exponent == alpha;
        for (const IrrLabel& lab : lvl.irr) {
            if (lab.degree_exponent > alpha) ok = false;
            else seen[size_t(lab.degree_exponent)] = 1;
        }
        for (char s : seen)
            if (!s) ok = false;
        rep.exponent_interval_ok = ok;
        if (!ok) fail("attained degree exponents are not the full interval");
    } else {
        rep.exponent_interval_ok = true;
    }

    // regular character: sum of deg * value vanishes off the identity
    {
        rep.regular_character_ok = true;
        for (size_t c = 0; c < lvl.classes.size(); ++c) {
            CycI acc(tower.p(), m);
            for (size_t i = 0; i < lvl.irr.size(); ++i) {
                CycI v = tower.value(m, int(i), int(c));
                acc.add_scaled(v, ll_pow(tower.p(), lvl.irr[i].degree_exponent));
            }
            bool ok = c == 0 ? (acc.is_rational() &&
                                Bint(acc.rational()) == lvl.group_order)
                             : acc.is_zero();
            if (!ok) {
                rep.regular_character_ok = false;
                fail("regular character fails at class " +
                     lvl.classes[c].to_string());
                break;
            }
        }
    }

    if (m == 0) {
        rep.lower_gram_ok = rep.gram_ok = rep.sampled_gram_ok = true;
        return rep;
    }

    const int p = tower.p();
    const WreathLevel& low = tower.level(m - 1);
    const auto& low_table = tower.table(m - 1);

    // first orthogonality one level down, straight from the cached table
    {
        rep.lower_gram_ok = true;
        for (size_t a = 0; a < low.irr.size() && rep.lower_gram_ok; ++a)
            for (size_t b = a; b < low.irr.size(); ++b) {
                CycI acc(p, m - 1);
                for (size_t d = 0; d < low.classes.size(); ++d) {
                    CycI term = low_table[a][d] * low_table[b][d].conj();
                    acc.add_scaled(term, (long long)low.classes[d].size);
                }
                Bint expect = a == b ? low.group_order : Bint(0);
                if (!acc.is_rational() || Bint(acc.rational()) != expect) {
                    rep.lower_gram_ok = false;
                    fail("lower-level orthogonality fails");
                    break;
                }
            }
    }

    // Full pairwise first orthogonality at this level.  Base-class values
    // live one ring down; tile the label rows to bound memory.
    {
        rep.gram_ok = true;
        std::vector<size_t> base_ids;
        std::vector<long long> base_sizes;
        for (size_t c = 0; c < lvl.classes.size(); ++c)
            if (lvl.classes[c].kind == ClassLabel::Kind::base) {
                base_ids.push_back(c);
                base_sizes.push_back((long long)lvl.classes[c].size);
            }
        const size_t nbase = base_ids.size();
        const size_t ord = size_t(CycI::order_of(p, m - 1));
        const size_t nirr = lvl.irr.size();
        const size_t tile =
            std::max<size_t>(1, (64u << 20) / std::max<size_t>(1, nbase * ord * 8));

        auto build_rows = [&](size_t lo, size_t hi, bool conjugate) {
            std::vector<long long> rows((hi - lo) * nbase * ord, 0);
            for (size_t i = lo; i < hi; ++i)
                for (size_t cb = 0; cb < nbase; ++cb) {
                    CycI v = tower.base_value(m, int(i),
                                              lvl.classes[base_ids[cb]].tuple);
                    if (conjugate) v = v.conj();
                    long long* dst = &rows[((i - lo) * nbase + cb) * ord];
                    for (size_t e = 0; e < ord; ++e) dst[e] = v.coeffs()[e];
                }
            return rows;
        };

        const long long group_order_ll = (long long)lvl.group_order;
        std::vector<long long> acc(ord);
        for (size_t alo = 0; alo < nirr && rep.gram_ok; alo += tile) {
            size_t ahi = std::min(nirr, alo + tile);
            std::vector<long long> arows = build_rows(alo, ahi, false);
            for (size_t blo = alo; blo < nirr && rep.gram_ok; blo += tile) {
                size_t bhi = std::min(nirr, blo + tile);
                std::vector<long long> brows = build_rows(blo, bhi, true);
                for (size_t a = alo; a < ahi && rep.gram_ok; ++a) {
                    for (size_t b = std::max(a, blo); b < bhi; ++b) {
                        std::fill(acc.begin(), acc.end(), 0);
                        const long long* ra = &arows[(a - alo) * nbase * ord];
                        const long long* rb = &brows[(b - blo) * nbase * ord];
                        for (size_t cb = 0; cb < nbase; ++cb) {
                            const long long s = base_sizes[cb];
                            const long long* va = ra + cb * ord;
                            const long long* vb = rb + cb * ord;
                            for (size_t e1 = 0; e1 < ord; ++e1) {
                                if (va[e1] == 0) continue;
                                long long sa = s * va[e1];
                                for (size_t e2 = 0; e2 < ord; ++e2) {
                                    if (vb[e2] == 0) continue;
                                    size_t e = e1 + e2;
                                    if (e >= ord) e -= ord;
                                    acc[e] += sa * vb[e2];
                                }
                            }
                        }
                        CycI base_sum(p, m - 1);
                        for (size_t e = 0; e < ord; ++e) base_sum.coeff(e) = acc[e];
                        base_sum.reduce();
                        CycI total = base_sum.embed_into(m);
                        const IrrLabel& la = lvl.irr[a];
                        const IrrLabel& lb = lvl.irr[b];
                        if (la.kind == IrrLabel::Kind::extension &&
                            lb.kind == IrrLabel::Kind::extension) {
                            for (size_t c = 0; c < lvl.classes.size(); ++c) {
                                if (lvl.classes[c].kind != ClassLabel::Kind::twisted)
                                    continue;
                                CycI term = tower.value(m, int(a), int(c)) *
                                            tower.value(m, int(b), int(c)).conj();
                                total.add_scaled(term,
                                                 (long long)lvl.classes[c].size);
                            }
                        }
                        long long expect = a == b ? group_order_ll : 0;
                        if (!total.is_rational() || total.rational() != expect) {
                            rep.gram_ok = false;
                            fail("first orthogonality fails for labels " +
                                 la.to_string() + ", " + lb.to_string());
                            break;
                        }
                    }
                }
            }
        }
    }

    // Seeded naive cross-check over all classes for a sample of pairs.
    {
        rep.sampled_gram_ok = true;
        std::mt19937 rng(sample_seed);
        std::uniform_int_distribution<size_t> pick(0, lvl.irr.size() - 1);
        for (int s = 0; s < sample_pairs && rep.sampled_gram_ok; ++s) {
            size_t a = pick(rng), b = pick(rng);
            CycI acc(p, m);
            for (size_t c = 0; c < lvl.classes.size(); ++c) {
                CycI term =
                    tower.value(m, int(a), int(c)) * tower.value(m, int(b), int(c)).conj();
                acc.add_scaled(term, (long long)lvl.classes[c].size);
            }
            Bint expect = a == b ? lvl.group_order : Bint(0);
            if (!acc.is_rational() || Bint(acc.rational()) != expect) {
                rep.sampled_gram_ok = false;
                fail("sampled naive orthogonality fails");
            }
        }
    }

    return rep;
}

}  // namespace sylow
