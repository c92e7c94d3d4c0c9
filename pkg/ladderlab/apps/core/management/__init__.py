# Management package init
