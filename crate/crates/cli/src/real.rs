//! Subverbs on the real line.

use anyhow::Result;
use clap::{Subcommand, ValueEnum};

use gtsep::realline::{
    check_ladder_sym, continuity_violation, disjoint_open_triple, effective_f, gul_witness, image_and_connectedness,
    ladder_from_f, parse_map, parse_set, tietze_extend, LineSpace,
};
use gtsep::Target;

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Gtn,
    Gts,
}

impl From<SpaceArg> for LineSpace {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Gtn => LineSpace::Gtn,
            SpaceArg::Gts => LineSpace::Gts,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Taun,
    Gtaun,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Taun => Target::Taun,
            TargetArg::Gtaun => Target::Gtaun,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum RealCommand {
    /// Closure of a set.
    Closure {
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "gtn")]
        space: SpaceArg,
    },
    /// Open, closed, clopen or neither.
    Classify {
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "gtn")]
        space: SpaceArg,
    },
    /// Separating map for two disjoint closed sets.
    Urysohn {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "gtn")]
        space: SpaceArg,
    },
    /// Extension of a map from a closed interval or ray to the line.
    Extend {
        #[arg(long)]
        p: String,
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "gtaun")]
        target: TargetArg,
    },
    /// Continuity of a map between a line space and a target.
    CheckFn {
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "gtn")]
        source: SpaceArg,
        #[arg(long, value_enum, default_value = "gtaun")]
        target: TargetArg,
    },
    /// Canonical separating open pair.
    EffectiveF {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "gtn")]
        space: SpaceArg,
    },
    /// Dyadic ladder of open sets between two closed sets.
    Ladder {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "gtn")]
        space: SpaceArg,
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
    /// Preimages of three disjoint windows and their classification.
    Triple {
        #[arg(long)]
        f: String,
    },
}

pub fn run(cmd: &RealCommand) -> Result<Report> {
    Ok(match cmd {
        RealCommand::Closure { set, space } => {
            let s = parse_set(set)?;
            let space = LineSpace::from(*space);
            Report::new().field("set", &s).field("space", space).field("closure", space.closure(&s))
        }
        RealCommand::Classify { set, space } => {
            let s = parse_set(set)?;
            let space = LineSpace::from(*space);
            Report::new().field("set", &s).field("space", space).field("class", space.classify(&s))
        }
        RealCommand::Urysohn { a, b, space } => {
            let (a, b, space) = (parse_set(a)?, parse_set(b)?, LineSpace::from(*space));
            let f = gul_witness(&a, &b, space)?;
            let (image, connected) = image_and_connectedness(&f);
            let verdict = |t| continuity_violation(&f, None, space, t).is_none();
            Report::new()
                .field("a", &a)
                .field("b", &b)
                .field("space", space)
                .field("map", f.to_string())
                .field("continuity", serde_json::json!({"gtaun": verdict(Target::Gtaun), "taun": verdict(Target::Taun)}))
                .field("image", image)
                .field("connected", connected)
        }
        RealCommand::Extend { p, f, target } => {
            let (p, f, target) = (parse_set(p)?, parse_map(f)?, Target::from(*target));
            let g = tietze_extend(&p, &f, target)?;
            let continuous = continuity_violation(&g, None, LineSpace::Gtn, target).is_none();
            Report::new()
                .field("p", &p)
                .field("target", target)
                .field("extension", g.to_string())
                .field("continuous", continuous)
        }
        RealCommand::CheckFn { f, source, target } => {
            let (f, source, target) = (parse_map(f)?, LineSpace::from(*source), Target::from(*target));
            let violation = continuity_violation(&f, None, source, target);
            let (image, connected) = image_and_connectedness(&f);
            Report::new()
                .field("map", f.to_string())
                .field("source", source)
                .field("target", target)
                .field("continuous", violation.is_none())
                .field("violation", violation)
                .field("image", image)
                .field("connected", connected)
        }
        RealCommand::EffectiveF { a, b, space } => {
            let (a, b, space) = (parse_set(a)?, parse_set(b)?, LineSpace::from(*space));
            Report::new().field("a", &a).field("b", &b).field("space", space).field("witness", effective_f(&a, &b, space)?)
        }
        RealCommand::Ladder { a, b, space, level } => {
            let (a, b, space) = (parse_set(a)?, parse_set(b)?, LineSpace::from(*space));
            let ladder = ladder_from_f(&a, &b, space, *level)?;
            let violation = check_ladder_sym(&ladder, &a, &b, space);
            Report::new()
                .field("a", &a)
                .field("b", &b)
                .field("space", space)
                .field("level", level)
                .field("ladder", &ladder)
                .field("violation", violation)
        }
        RealCommand::Triple { f } => {
            let f = parse_map(f)?;
            Report::new().field("map", f.to_string()).field("triple", disjoint_open_triple(&f))
        }
    })
}
