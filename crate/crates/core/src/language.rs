use crate::word::{Alphabet, UpWord};

/// An ω-language queried through its ultimately periodic words.
pub trait OmegaLanguage {
    fn alphabet(&self) -> &Alphabet;

    fn contains(&self, w: &UpWord) -> bool;

    /// Short description used in certificates and reports.
    fn describe(&self) -> String;
}

/// The complement of another language.
#[derive(Debug, Clone, Copy)]
pub struct Complement<L>(pub L);

impl<L: OmegaLanguage> OmegaLanguage for Complement<L> {
    fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    fn contains(&self, w: &UpWord) -> bool {
        !self.0.contains(w)
    }

    fn describe(&self) -> String {
        format!("complement({})", self.0.describe())
    }
}

impl<L: OmegaLanguage + ?Sized> OmegaLanguage for &L {
    fn alphabet(&self) -> &Alphabet {
        (**self).alphabet()
    }

    fn contains(&self, w: &UpWord) -> bool {
        (**self).contains(w)
    }

    fn describe(&self) -> String {
        (**self).describe()
    }
}
