"""Base class used by all ctxdegree api "category" classes."""
import logging
from abc import abstractmethod

from ctxdegree.api.contextuality_api_base import ContextualityApiBase

logger = logging.getLogger(__name__)


class ContextualityApiCategory(ContextualityApiBase):
    """Base class for API categories."""

    def __init__(self, adapter=None):
        """API Category class constructor.

        :param adapter: Instance of :py:class:`ctxdegree.adapters.Adapter`; shared by every class of the category.
        :type adapter: ctxdegree.adapters.Adapter
        """
        super(ContextualityApiCategory, self).__init__(adapter=adapter)
        self.implemented_class_names = []
        for implemented_class in self.implemented_classes:
            class_name = implemented_class.__name__.lower()
            self.implemented_class_names.append(class_name)
            setattr(self, self.get_private_attr_name(class_name), implemented_class(adapter=self._adapter))

    def __getattr__(self, item):
        """Get an instance of an class instance in this category where available.

        :param item: Name of the class being requested.
        :type item: str
        :return: The requested class instance where available.
        :rtype: ctxdegree.api.ContextualityApiBase
        """
        if item in self.__dict__.get('implemented_class_names', []):
            return self.__dict__[self.get_private_attr_name(item)]
        if item in [u.lower() for u in self.unimplemented_classes]:
            raise NotImplementedError('"{0}" class not currently implemented.'.format(item))
        raise AttributeError("'{class_name}' has no attribute '{item}'".format(
            class_name=self.__class__.__name__,
            item=item,
        ))

    @property
    def adapter(self):
        """Retrieve the adapter instance under the "_adapter" property in use by this class.

        :return: The adapter instance in use by this class.
        :rtype: ctxdegree.adapters.Adapter
        """
        return self._adapter

    @adapter.setter
    def adapter(self, adapter):
        """Sets the adapter instance under the "_adapter" property in use by this class.

        Also sets the adapter property for all implemented classes under this category.

        :param adapter: New adapter instance to set for this class and all implemented classes under this category.
        :type adapter: ctxdegree.adapters.Adapter
        """
        self._adapter = adapter
        for class_name in self.implemented_class_names:
            getattr(self, self.get_private_attr_name(class_name)).adapter = adapter

    @property
    @abstractmethod
    def implemented_classes(self):
        """List of implemented classes under this category.

        :return: List of implemented classes under this category.
        :rtype: List[ctxdegree.api.ContextualityApiBase]
        """
        raise NotImplementedError

    @property
    def unimplemented_classes(self):
        """List of known unimplemented classes under this category.

        :return: List of known unimplemented classes under this category.
        :rtype: List[str]
        """
        return []

    @staticmethod
    def get_private_attr_name(class_name):
        """Helper method to prepend a leading underscore to a provided class name.

        :param class_name: Name of a class under this category.
        :type class_name: str
        :return: The private attribute label for the provided class.
        :rtype: str
        """
        return '_{class_name}'.format(class_name=class_name)
