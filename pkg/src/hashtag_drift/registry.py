#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import logging
from inspect import Parameter, signature

logger = logging.getLogger(__name__)

__all__ = ["Registry", "READER_REGISTRY", "EXPORTER_REGISTRY", "BETWEENNESS_REGISTRY"]


class Registry:
    """Name to class lookup filled by a class decorator when the defining module is imported.

    Every class registered after the first must share the first class' direct base, so a registry only ever holds
        one kind of component (record readers, graph exporters or betweenness backends).

    Examples:
        >>> @READER_REGISTRY.register("jsonl")
        >>> class JsonLinesReader(BaseRecordReader):
        >>>     ...
        >>> reader = READER_REGISTRY.create("jsonl", timestamp_field="created_at")
    """
    def __init__(self, kind):
        self.kind = kind
        self._modules = {}
        self._base = None

    def register(self, name):
        def class_registration_decorator(module_class):
            # Ensure all registry items are of the same type
            if self._base is None:
                self._base = module_class.__mro__[1]
            elif not issubclass(module_class, self._base):
                raise ValueError("{} '{}' must inherit from {}".format(
                    self.kind.capitalize(), module_class.__name__, self._base.__name__))
            if name in self._modules:
                logger.error("{} '{}' already in the registry as '{}'".format(
                    self.kind.capitalize(), name, self._modules[name].__name__))
            else:
                logger.debug("Registering {} '{}' as '{}'".format(self.kind, module_class.__name__, name))
                self._modules[name] = module_class

            return self._modules[name]

        return class_registration_decorator

    def __getitem__(self, item):
        if item not in self._modules:
            logger.error("{} '{}' not in registry. Available: {}".format(
                self.kind.capitalize(), item, self.available()))
            raise KeyError(item)
        return self._modules[item]

    def __contains__(self, item):
        return item in self._modules

    def available(self):
        return tuple(sorted(self._modules.keys()))

    def get_arguments(self, item):
        """Split the constructor parameters of a registered class into required names and optional defaults"""
        params = [p for p in signature(self[item].__init__).parameters.values()
                  if p.name != "self" and p.kind in (Parameter.POSITIONAL_OR_KEYWORD, Parameter.KEYWORD_ONLY)]
        required_args = [p.name for p in params if p.default is Parameter.empty]
        optional_args = {p.name: p.default for p in params if p.default is not Parameter.empty}
        return required_args, optional_args

    def create(self, item, **options):
        """Instantiate a registered class with whichever of ``options`` its constructor accepts.

        Raises:
            TypeError: If a required constructor argument is missing from options
        """
        required_args, optional_args = self.get_arguments(item)
        kwargs = {k: v for k, v in options.items() if k in required_args or k in optional_args}
        _missing_args = [a for a in required_args if a not in kwargs]
        if _missing_args:
            raise TypeError("Cannot initialise without the '{}' parameter(s) for the '{}' {}".format(
                ", ".join(_missing_args), item, self.kind))
        return self[item](**kwargs)


READER_REGISTRY = Registry("reader")
EXPORTER_REGISTRY = Registry("exporter")
BETWEENNESS_REGISTRY = Registry("betweenness backend")
