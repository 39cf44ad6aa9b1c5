//! Post-Lie-Yamaguti algebras: operations `·, *, ⟨,,⟩, {,,}`, their axioms,
//! the sub-adjacent algebra and the structure induced by an operator.

use crate::algebra::{check_homomorphism, LinearMap, LyAlgebra};
use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, sub_vec, unit_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::rep::RepAction;
use crate::report::{CheckOptions, Report};
use crate::rrb::RrbOperator;
use crate::tensor::{Bilinear, Trilinear};

/// Which form of the two brace identities involving nested braces to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PostReading {
    /// The identities obtained from the representation axioms through
    /// `L(x)z = x*z`, `R(x,y)z = {z,x,y}`; these make the induced structure of
    /// every operator a post-Lie-Yamaguti algebra.
    #[default]
    Transported,
    /// The literal forms `{x,y,⟨z,w,t⟩_C} = {{x,w,z},w,t} − {{x,y,w},z,t} +
    /// {z,w,{x,y,t}_D}` and `{x,y,{z,w,t}_D} = …`, with `{,,}_D` applied to the
    /// inner triple.
    Literal,
}

#[derive(Clone, Debug)]
pub struct PostLyAlgebra {
    name: String,
    dot: Bilinear,
    star: Bilinear,
    angle: Trilinear,
    brace: Trilinear,
    brace_d: Trilinear,
    sub_bin: Bilinear,
    sub_ter: Trilinear,
}

impl PartialEq for PostLyAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.dot == o.dot && self.star == o.star && self.angle == o.angle && self.brace == o.brace
    }
}

impl PostLyAlgebra {
    pub fn new(
        name: impl Into<String>,
        dot: Bilinear,
        star: Bilinear,
        angle: Trilinear,
        brace: Trilinear,
    ) -> Result<Self> {
        let n = dot.n();
        for (what, a, o) in [("dot", dot.n(), dot.out()), ("star", star.n(), star.out())] {
            dim_check(&format!("{what} arity"), n, a)?;
            dim_check(&format!("{what} output"), n, o)?;
        }
        for (what, a, o) in [("angle", angle.n(), angle.out()), ("brace", brace.n(), brace.out())] {
            dim_check(&format!("{what} arity"), n, a)?;
            dim_check(&format!("{what} output"), n, o)?;
        }
        if let Some((i, j)) = dot.is_antisymmetric() {
            return Err(LyaError::AxiomsFailed(format!(
                "dot product is not antisymmetric at ({i}, {j})"
            )));
        }
        if let Some((i, j, k)) = angle.is_antisymmetric_12() {
            return Err(LyaError::AxiomsFailed(format!(
                "angle bracket is not antisymmetric in its first two slots at ({i}, {j}, {k})"
            )));
        }
        let (brace_d, sub_bin, sub_ter) = derived(&dot, &star, &angle, &brace);
        Ok(PostLyAlgebra {
            name: name.into(),
            dot,
            star,
            angle,
            brace,
            brace_d,
            sub_bin,
            sub_ter,
        })
    }

    pub fn zero(n: usize) -> Self {
        Self::new(
            format!("zero{n}"),
            Bilinear::zero(n, n),
            Bilinear::zero(n, n),
            Trilinear::zero(n, n),
            Trilinear::zero(n, n),
        )
        .expect("zero tensors")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dot.n()
    }

    pub fn dot(&self) -> &Bilinear {
        &self.dot
    }

    pub fn star(&self) -> &Bilinear {
        &self.star
    }

    pub fn angle(&self) -> &Trilinear {
        &self.angle
    }

    pub fn brace(&self) -> &Trilinear {
        &self.brace
    }

    /// `{x,y,z}_D = {z,y,x} − {z,x,y} + (y,x,z) − (x,y,z) − (x·y)*z`
    pub fn brace_d(&self) -> &Trilinear {
        &self.brace_d
    }

    /// `[x,y]_C = x*y − y*x + x·y`
    pub fn sub_binary(&self) -> &Bilinear {
        &self.sub_bin
    }

    /// `⟨x,y,z⟩_C = {x,y,z}_D + {x,y,z} − {y,x,z} + ⟨x,y,z⟩`
    pub fn sub_ternary(&self) -> &Trilinear {
        &self.sub_ter
    }

    /// `(A, ·, ⟨,,⟩)` as an algebra (checked on demand).
    pub fn carrier_algebra(&self) -> LyAlgebra {
        LyAlgebra::from_tensors(format!("{} (dot, angle)", self.name), self.dot.clone(), self.angle.clone())
            .expect("antisymmetry checked at construction")
            .verify()
            .0
    }

    pub fn check_post_axioms(&self, opts: CheckOptions) -> Report {
        self.check_post_axioms_with(opts, PostReading::Transported)
    }

    /// The carrier axioms, the five brace/star identities in the chosen
    /// reading, and the six vanishing conditions.
    pub fn check_post_axioms_with(&self, opts: CheckOptions, reading: PostReading) -> Report {
        let n = self.dim();
        let e = |i: usize| unit_vec(n, i);
        let st = |a: &[Rational], b: &[Rational]| self.star.eval(a, b);
        let dt = |a: &[Rational], b: &[Rational]| self.dot.eval(a, b);
        let br = |a: &[Rational], b: &[Rational], c: &[Rational]| self.brace.eval(a, b, c);
        let bd = |a: &[Rational], b: &[Rational], c: &[Rational]| self.brace_d.eval(a, b, c);
        let an = |a: &[Rational], b: &[Rational], c: &[Rational]| self.angle.eval(a, b, c);
        let sb = |a: &[Rational], b: &[Rational]| self.sub_bin.eval(a, b);
        let sc = |a: &[Rational], b: &[Rational], c: &[Rational]| self.sub_ter.eval(a, b, c);

        let mut r = Report::new(format!("post-Lie-Yamaguti axioms of {}", self.name), opts);
        if reading == PostReading::Literal {
            r.note("literal reading of the nested brace identities");
        }
        let (bd0, sb0, sc0) = derived(&self.dot, &self.star, &self.angle, &self.brace);
        r.check_flag(
            "post.derived_caches",
            bd0 == self.brace_d && sb0 == self.sub_bin && sc0 == self.sub_ter,
        );
        let carrier = LyAlgebra::from_tensors("carrier", self.dot.clone(), self.angle.clone())
            .expect("antisymmetry checked at construction");
        r.absorb("carrier", carrier.check_ly_axioms(opts));

        // {z,[x,y]_C,w} = {y*z,x,w} − {x*z,y,w}
        r.check_tuples("post.brace_bracket_middle", &[n, n, n, n], |ix| {
            let (x, y, z, w) = (e(ix[0]), e(ix[1]), e(ix[2]), e(ix[3]));
            let lhs = br(&z, &sb(&x, &y), &w);
            let rhs = sub_vec(&br(&st(&y, &z), &x, &w), &br(&st(&x, &z), &y, &w));
            sub_vec(&lhs, &rhs)
        });
        // {x,y,[z,w]_C} = z*{x,y,w} − w*{x,y,z}
        r.check_tuples("post.brace_bracket_last", &[n, n, n, n], |ix| {
            let (x, y, z, w) = (e(ix[0]), e(ix[1]), e(ix[2]), e(ix[3]));
            let lhs = br(&x, &y, &sb(&z, &w));
            let rhs = sub_vec(&st(&z, &br(&x, &y, &w)), &st(&w, &br(&x, &y, &z)));
            sub_vec(&lhs, &rhs)
        });
        // ⟨x,y,z⟩_C*w = {x,y,z*w}_D − z*{x,y,w}_D
        r.check_tuples("post.star_ternary", &[n, n, n, n], |ix| {
            let (x, y, z, w) = (e(ix[0]), e(ix[1]), e(ix[2]), e(ix[3]));
            let lhs = st(&sc(&x, &y, &z), &w);
            let rhs = sub_vec(&bd(&x, &y, &st(&z, &w)), &st(&z, &bd(&x, &y, &w)));
            sub_vec(&lhs, &rhs)
        });
        // {x,y,⟨z,w,t⟩_C} = {{x,y,z},w,t} − {{x,y,w},z,t} + {z,w,{x,y,t}}_D
        // (literal reading: first term {{x,w,z},w,t}, last term {z,w,{x,y,t}_D})
        r.check_tuples("post.brace_ternary_last", &[n, n, n, n, n], |ix| {
            let (x, y, z, w, t) = (e(ix[0]), e(ix[1]), e(ix[2]), e(ix[3]), e(ix[4]));
            let lhs = br(&x, &y, &sc(&z, &w, &t));
            let (first, last) = match reading {
                PostReading::Transported => (br(&br(&x, &y, &z), &w, &t), bd(&z, &w, &br(&x, &y, &t))),
                PostReading::Literal => (br(&br(&x, &w, &z), &w, &t), br(&z, &w, &bd(&x, &y, &t))),
            };
            let rhs = add_vec(&sub_vec(&first, &br(&br(&x, &y, &w), &z, &t)), &last);
            sub_vec(&lhs, &rhs)
        });
        // {x,y,{z,w,t}}_D = {{x,y,z}_D,w,t} + {z,⟨x,y,w⟩_C,t} + {z,w,⟨x,y,t⟩_C}
        // (literal reading: left side {x,y,{z,w,t}_D})
        r.check_tuples("post.brace_d_last", &[n, n, n, n, n], |ix| {
            let (x, y, z, w, t) = (e(ix[0]), e(ix[1]), e(ix[2]), e(ix[3]), e(ix[4]));
            let lhs = match reading {
                PostReading::Transported => bd(&x, &y, &br(&z, &w, &t)),
                PostReading::Literal => br(&x, &y, &bd(&z, &w, &t)),
            };
            let mut rhs = br(&bd(&x, &y, &z), &w, &t);
            rhs = add_vec(&rhs, &br(&z, &sc(&x, &y, &w), &t));
            rhs = add_vec(&rhs, &br(&z, &w, &sc(&x, &y, &t)));
            sub_vec(&lhs, &rhs)
        });
        // (x*y)·z = ⟨x*y,z,w⟩ = ⟨z,w,x*y⟩ = 0
        r.check_tuples("post.star_dot_vanishes", &[n, n, n], |ix| {
            dt(&st(&e(ix[0]), &e(ix[1])), &e(ix[2]))
        });
        r.check_tuples("post.star_angle_first_vanishes", &[n, n, n, n], |ix| {
            an(&st(&e(ix[0]), &e(ix[1])), &e(ix[2]), &e(ix[3]))
        });
        r.check_tuples("post.star_angle_last_vanishes", &[n, n, n, n], |ix| {
            an(&e(ix[2]), &e(ix[3]), &st(&e(ix[0]), &e(ix[1])))
        });
        // x*(y·z) = 0, {x·y,z,w} = 0
        r.check_tuples("post.star_kills_dot", &[n, n, n], |ix| {
            st(&e(ix[0]), &dt(&e(ix[1]), &e(ix[2])))
        });
        r.check_tuples("post.brace_kills_dot", &[n, n, n, n], |ix| {
            br(&dt(&e(ix[0]), &e(ix[1])), &e(ix[2]), &e(ix[3]))
        });
        // x*⟨z,w,t⟩ = 0, {⟨z,w,t⟩,x,y} = 0
        r.check_tuples("post.star_kills_angle", &[n, n, n, n], |ix| {
            st(&e(ix[0]), &an(&e(ix[1]), &e(ix[2]), &e(ix[3])))
        });
        r.check_tuples("post.brace_kills_angle", &[n, n, n, n, n], |ix| {
            br(&an(&e(ix[0]), &e(ix[1]), &e(ix[2])), &e(ix[3]), &e(ix[4]))
        });
        r
    }

    fn gate(&self) -> Result<()> {
        let r = self.check_post_axioms(CheckOptions::first_only());
        if r.passed() {
            Ok(())
        } else {
            Err(LyaError::AxiomsFailed(format!(
                "post-Lie-Yamaguti axioms fail: {}",
                r.failing_equations().join(", ")
            )))
        }
    }

    /// The sub-adjacent algebra `(A, [,]_C, ⟨,,⟩_C)`; the axioms are checked first.
    pub fn subadjacent(&self) -> Result<LyAlgebra> {
        self.gate()?;
        Ok(self.subadjacent_unchecked().verify().0)
    }

    pub fn subadjacent_unchecked(&self) -> LyAlgebra {
        LyAlgebra::from_tensors(
            format!("sub-adjacent of {}", self.name),
            self.sub_bin.clone(),
            self.sub_ter.clone(),
        )
        .expect("[,]_C and ⟨,,⟩_C are antisymmetric")
    }

    fn induced_action_unchecked(&self) -> RepAction {
        let n = self.dim();
        let rho: Vec<Matrix> = (0..n).map(|i| self.star.left_mult(&unit_vec(n, i))).collect();
        let mut mu = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let cols: Vec<Vector> = (0..n).map(|k| self.brace.at(k, i, j).clone()).collect();
                mu.push(Matrix::from_cols(&cols, n).expect("square"));
            }
        }
        let acting = self.subadjacent_unchecked().verify().0;
        RepAction::new(acting, self.carrier_algebra(), rho, mu).expect("square operators")
    }

    /// `L(x)z = x*z`, `R(x,y)z = {z,x,y}` as a representation of the
    /// sub-adjacent algebra on `(A, ·, ⟨,,⟩)`, certified when the action
    /// conditions hold.
    pub fn induced_action(&self) -> Result<RepAction> {
        self.gate()?;
        Ok(self.induced_action_unchecked().certify(CheckOptions::first_only()).0)
    }

    /// Representation and action checks for the induced action, plus the
    /// identity `D_{L,R}(x,y)z = {x,y,z}_D`.
    pub fn check_induced_action(&self, opts: CheckOptions) -> Result<Report> {
        self.gate()?;
        let rep = self.induced_action_unchecked();
        let n = self.dim();
        let mut r = Report::new(format!("induced action of {}", self.name), opts);
        r.absorb("", rep.check_representation(opts));
        r.absorb("", rep.check_action(opts));
        r.check_tuples("post.induced_d_is_brace_d", &[n, n, n], |ix| {
            sub_vec(&rep.d_e(ix[0], ix[1]).col(ix[2]), self.brace_d.at(ix[0], ix[1], ix[2]))
        });
        Ok(r)
    }

    /// The identity map over the induced action, run through the weight-1 check.
    pub fn identity_is_rrb(&self, opts: CheckOptions) -> Result<Report> {
        self.gate()?;
        let rep = self.induced_action()?;
        let certified = rep.is_action_certified();
        let op = RrbOperator::new(rep, LinearMap::identity(self.dim()))?;
        let mut r = op.check_rrb(opts);
        r.subject = format!("identity on {} as a weight-1 operator", self.name);
        r.check_flag("post.induced_action_certified", certified);
        Ok(r)
    }
}

/// `u·v = [u,v]_h`, `u*v = ρ(Tu)v`, `{u,v,w} = μ(Tv,Tw)u`, `⟨u,v,w⟩ = ⟨u,v,w⟩_h`.
pub fn induced_post_from_rrb(op: &RrbOperator) -> Result<PostLyAlgebra> {
    op.ensure_verified()?;
    Ok(induced_post_unchecked(op))
}

/// Same tensors for an arbitrary map.
pub fn induced_post_unchecked(op: &RrbOperator) -> PostLyAlgebra {
    let h = op.h();
    let a = op.action();
    let n = h.dim();
    let tim: Vec<Vector> = (0..n).map(|i| op.apply(&unit_vec(n, i))).collect();
    let star = Bilinear::from_fn(n, n, |i, j| a.rho_apply(&tim[i], &unit_vec(n, j)));
    let brace = Trilinear::from_fn(n, n, |i, j, k| a.mu_apply(&tim[j], &tim[k], &unit_vec(n, i)));
    PostLyAlgebra::new(
        format!("post structure of {}", h.name()),
        h.binary().clone(),
        star,
        h.ternary().clone(),
        brace,
    )
    .expect("carrier brackets are antisymmetric")
}

/// `ψ` preserves `·, ⟨,,⟩, *, {,,}`; the induced map of sub-adjacent algebras is
/// checked as well.
pub fn check_post_homomorphism(
    a: &PostLyAlgebra,
    b: &PostLyAlgebra,
    psi: &LinearMap,
    opts: CheckOptions,
) -> Result<Report> {
    dim_check("post homomorphism source", a.dim(), psi.source_dim())?;
    dim_check("post homomorphism target", b.dim(), psi.target_dim())?;
    let n = a.dim();
    let im: Vec<Vector> = (0..n).map(|i| psi.image(i)).collect();
    let mut r = Report::new(format!("post homomorphism {} -> {}", a.name, b.name), opts);
    let pairs: [(&str, &Bilinear, &Bilinear); 2] = [
        ("post_hom.dot", &a.dot, &b.dot),
        ("post_hom.star", &a.star, &b.star),
    ];
    for (id, x, y) in pairs {
        r.check_tuples(id, &[n, n], |ix| {
            sub_vec(&psi.apply(x.at(ix[0], ix[1])), &y.eval(&im[ix[0]], &im[ix[1]]))
        });
    }
    let triples: [(&str, &Trilinear, &Trilinear); 2] = [
        ("post_hom.angle", &a.angle, &b.angle),
        ("post_hom.brace", &a.brace, &b.brace),
    ];
    for (id, x, y) in triples {
        r.check_tuples(id, &[n, n, n], |ix| {
            sub_vec(
                &psi.apply(x.at(ix[0], ix[1], ix[2])),
                &y.eval(&im[ix[0]], &im[ix[1]], &im[ix[2]]),
            )
        });
    }
    let sub = check_homomorphism(&a.subadjacent_unchecked(), &b.subadjacent_unchecked(), psi, opts)?;
    r.absorb("subadjacent", sub);
    Ok(r)
}

fn derived(
    dot: &Bilinear,
    star: &Bilinear,
    angle: &Trilinear,
    brace: &Trilinear,
) -> (Trilinear, Bilinear, Trilinear) {
    let n = dot.n();
    let e = |i: usize| unit_vec(n, i);
    let assoc = |a: &[Rational], b: &[Rational], c: &[Rational]| {
        sub_vec(&star.eval(&star.eval(a, b), c), &star.eval(a, &star.eval(b, c)))
    };
    let brace_d = Trilinear::from_fn(n, n, |x, y, z| {
        let (ex, ey, ez) = (e(x), e(y), e(z));
        let mut acc = sub_vec(brace.at(z, y, x), brace.at(z, x, y));
        acc = add_vec(&acc, &assoc(&ey, &ex, &ez));
        acc = sub_vec(&acc, &assoc(&ex, &ey, &ez));
        sub_vec(&acc, &star.eval(dot.at(x, y), &ez))
    });
    let sub_bin = Bilinear::from_fn(n, n, |x, y| {
        add_vec(&sub_vec(star.at(x, y), star.at(y, x)), dot.at(x, y))
    });
    let sub_ter = Trilinear::from_fn(n, n, |x, y, z| {
        let mut acc = add_vec(brace_d.at(x, y, z), brace.at(x, y, z));
        acc = sub_vec(&acc, brace.at(y, x, z));
        add_vec(&acc, angle.at(x, y, z))
    });
    (brace_d, sub_bin, sub_ter)
}
