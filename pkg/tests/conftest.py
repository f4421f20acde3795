from hypothesis import settings

settings.register_profile("suite", derandomize=True, max_examples=80)
settings.load_profile("suite")
