//! Parallel corpus evaluation and corpus directories.

use std::path::{Path, PathBuf};
use std::time::Instant;

use pitheory_core::lab::{run_entry, run_entry_timed, CheckSpec, Corpus, VerdictReport};
use rayon::prelude::*;

use crate::groupfile::{parse_group_file, GroupSource, GroupSpecFile, LoadError};

pub const GROUP_FILE_EXTENSION: &str = "group";

/// Evaluates entries in parallel; reports come back in corpus order, and
/// within an entry in check order.
pub fn run_parallel(corpus: &Corpus, checks: &[CheckSpec], timing: bool) -> Vec<VerdictReport> {
    corpus
        .entries
        .par_iter()
        .map(|e| {
            if timing {
                let start = Instant::now();
                let clock = move || start.elapsed().as_micros() as u64;
                run_entry_timed(e, corpus.caps, checks, &clock)
            } else {
                run_entry(e, corpus.caps, checks)
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("duplicate group name `{name}` in {path}")]
    DuplicateName { name: String, path: String },
}

/// The `*.group` files of `dir`, sorted by file name.
pub fn group_files(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let io = |source| CorpusError::Io { path: dir.display().to_string(), source };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == GROUP_FILE_EXTENSION) {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Loads every group file of `dir` into `corpus`.
pub fn load_corpus_dir(dir: &Path, corpus: &mut Corpus) -> Result<(), CorpusError> {
    for path in group_files(dir)? {
        let spec = parse_group_file(&path)?;
        corpus
            .push(&spec.name, spec.recipe())
            .map_err(|_| CorpusError::DuplicateName { name: spec.name.clone(), path: path.display().to_string() })?;
    }
    Ok(())
}

/// A file name for a group name: characters outside `[A-Za-z0-9._-]`
/// become `_`.
pub fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || "._-".contains(c) { c } else { '_' }).collect()
}

/// Writes each entry to `dir` as a group file, in generator form or, with
/// `directives`, as a `construct` line. Returns the paths written.
pub fn export_corpus(corpus: &Corpus, dir: &Path, directives: bool) -> Result<Vec<PathBuf>, CorpusError> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| CorpusError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    for (i, e) in corpus.entries.iter().enumerate() {
        let spec = match &e.recipe {
            pitheory_core::construct::Recipe::Generators { degree, gens } => GroupSpecFile {
                name: e.name.clone(),
                source: GroupSource::Generators { degree: *degree, gens: gens.clone() },
            },
            r if directives => GroupSpecFile { name: e.name.clone(), source: GroupSource::Directive(r.clone()) },
            r => match r.build_with(corpus.caps) {
                Ok(g) => GroupSpecFile::from_group(&e.name, &g),
                Err(_) => GroupSpecFile { name: e.name.clone(), source: GroupSource::Directive(r.clone()) },
            },
        };
        let path = dir.join(format!("{:03}-{}.{GROUP_FILE_EXTENSION}", i + 1, file_stem(&e.name)));
        std::fs::write(&path, spec.to_text()).map_err(io(&path))?;
        written.push(path);
    }
    Ok(written)
}
