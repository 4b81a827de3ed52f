"""codeaug: semantic-preserving code transformation, balanced augmentation,
curriculum scheduling and test-time augmentation for a C-like mini-language."""

__version__ = "0.1.0"
