import hypothesis

hypothesis.settings.register_profile(
    "continued_roots", deadline=None, max_examples=100
)
hypothesis.settings.load_profile("continued_roots")
